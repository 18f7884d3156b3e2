#include "qlat/generators.hpp"

#include <map>

#include "qlat/error.hpp"

namespace qlat {

Formula alpha(const Formula& p, const Formula& q, const Formula& r) {
  Formula a = p | (q & r);
  Formula b = (p | q) & (p | r);
  return (a | b) & (~a | ~b);
}

Formula alpha() { return alpha(Formula::var("p"), Formula::var("q"), Formula::var("r")); }

std::array<std::string, 3> alpha_level_vars(std::size_t level) {
  const std::string k = std::to_string(level);
  return {"p" + k, "q" + k, "r" + k};
}

std::vector<Formula> alpha_tower(std::size_t m) {
  if (m == 0) throw PreconditionError("alpha_iter requires m >= 1");
  std::vector<Formula> levels;
  levels.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) {
    auto [p, q, r] = alpha_level_vars(k);
    Formula base = alpha(Formula::var(p), Formula::var(q), Formula::var(r));
    levels.push_back(k == 1 ? base : restrict(base, levels.back()));
  }
  return levels;
}

Formula alpha_iter(std::size_t m) { return alpha_tower(m).back(); }

Equation m_distributive(std::size_t m) {
  if (m == 0) throw PreconditionError("m_distributive requires m >= 1");
  const Formula x = Formula::var("x");
  std::vector<Formula> y;
  for (std::size_t i = 0; i <= m; ++i) y.push_back(Formula::var("y" + std::to_string(i)));

  Formula all = y[0];
  for (std::size_t i = 1; i <= m; ++i) all = all | y[i];

  std::vector<Formula> parts;
  for (std::size_t i = 0; i <= m; ++i) {
    std::vector<Formula> others;
    for (std::size_t j = 0; j <= m; ++j)
      if (j != i) others.push_back(y[j]);
    Formula rest = others[0];
    for (std::size_t j = 1; j < others.size(); ++j) rest = rest | others[j];
    parts.push_back(x & rest);
  }
  Formula rhs = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) rhs = rhs | parts[i];
  return {x & all, rhs, Relation::equal};
}

namespace {

const std::map<std::string, std::string, std::less<>>& law_catalog() {
  static const std::map<std::string, std::string, std::less<>> catalog = {
      {"distributivity", "x & (y | z) <= x & y | x & z"},
      {"modularity", "x & (y | x & z) <= x & y | z"},
      {"orthomodularity", "x & (~x | x & y) <= y"},
      {"de_morgan", "~(x & y) = ~x | ~y"},
      {"de_morgan_dual", "~(x | y) = ~x & ~y"},
      {"double_negation", "~~x = x"},
      {"excluded_middle", "x | ~x = 1"},
      {"non_contradiction", "x & ~x = 0"},
  };
  return catalog;
}

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : law_catalog()) out.push_back(name);
    return out;
  }();
  return names;
}

Equation law(std::string_view name) {
  auto it = law_catalog().find(name);
  if (it == law_catalog().end()) throw PreconditionError("unknown law '" + std::string(name) + "'");
  return parse_equation(it->second);
}

Formula distinctness_formula(const std::vector<std::string>& names) {
  if (names.size() < 3) throw PreconditionError("distinctness_formula needs at least 3 variables");
  std::vector<Formula> vars;
  for (const auto& n : names) vars.push_back(Formula::var(n));
  Formula acc = alpha(vars[0], vars[1], vars[2]);
  for (std::size_t k = 3; k < vars.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) acc = alpha(acc, vars[j], vars[k]);
  }
  return acc;
}

}  // namespace qlat
