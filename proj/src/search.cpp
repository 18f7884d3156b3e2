#include "qlat/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "qlat/generators.hpp"

namespace qlat {

const char* to_string(Status s) {
  return s == Status::counterexample_found ? "counterexample_found" : "no_counterexample";
}

SearchConfig SearchConfig::from_env() {
  SearchConfig c;
  if (const char* cap = std::getenv("QLAT_SIZE_CAP"); cap && *cap) {
    char* end = nullptr;
    unsigned long v = std::strtoul(cap, &end, 10);
    if (*end != '\0' || v == 0) {
      throw PreconditionError(std::string("QLAT_SIZE_CAP must be a positive integer, got '") + cap +
                              "'");
    }
    c.size_cap = v;
  }
  return c;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string dims_detail(std::initializer_list<std::pair<const char*, std::size_t>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, value] : items) {
    if (!first) os << ' ';
    os << "dim(" << label << ")=" << value;
    first = false;
  }
  return os.str();
}

struct Found {
  std::size_t trial;
  Assignment witness;
  Subspace lhs;
  Subspace rhs;
};

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ trial);
}

Assignment trial_assignment(const std::vector<std::string>& vars, std::size_t ambient,
                            std::uint64_t seed, std::uint64_t trial, DimRange dims,
                            long entry_bound) {
  std::mt19937_64 rng(trial_seed(seed, trial));
  Assignment a(ambient);
  for (const auto& v : vars) {
    std::size_t d = uniform_index(rng, dims.lo, dims.hi);
    a.bind(v, random_subspace(rng, ambient, d, entry_bound));
  }
  return a;
}

Verdict falsify(const Equation& eq, std::size_t ambient, std::size_t trials, std::uint64_t seed,
                std::optional<DimRange> dims, const FalsifyOptions& options) {
  if (trials == 0) throw PreconditionError("falsify needs at least one trial");
  if (ambient == 0) throw PreconditionError("ambient dimension must be at least 1");
  const DimRange range = dims.value_or(DimRange{0, ambient});
  if (range.lo > range.hi || range.hi > ambient) {
    throw PreconditionError("dimension range [" + std::to_string(range.lo) + ", " +
                            std::to_string(range.hi) + "] invalid in C^" + std::to_string(ambient));
  }
  const auto var_set = variables(eq);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());

  auto run_trial = [&](std::size_t t) -> std::optional<Found> {
    Assignment a = trial_assignment(vars, ambient, seed, t, range, options.entry_bound);
    if (options.audit) options.audit(a);
    EquationValue value = eval(eq, a);
    if (value.holds) return std::nullopt;
    return Found{t, std::move(a), std::move(value.lhs), std::move(value.rhs)};
  };

  std::optional<Found> found;
  if (!options.parallel) {
    for (std::size_t t = 0; t < trials && !found; ++t) found = run_trial(t);
  } else {
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t block = 16 * workers;
    for (std::size_t start = 0; start < trials && !found; start += block) {
      const std::size_t end = std::min(trials, start + block);
      std::vector<std::optional<Found>> results(end - start);
      std::atomic<std::size_t> next{start};
      std::exception_ptr error;
      std::mutex error_mutex;
      auto work = [&] {
        for (std::size_t t = next++; t < end; t = next++) {
          try {
            results[t - start] = run_trial(t);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
      if (error) std::rethrow_exception(error);
      for (auto& r : results) {
        if (r) {
          found = std::move(r);
          break;
        }
      }
    }
  }

  Verdict v{.status = Status::no_counterexample,
            .equation = eq,
            .ambient = ambient,
            .trials_run = trials,
            .seed = seed,
            .dims = range,
            .witness = std::nullopt,
            .gap = std::nullopt};
  if (found) {
    v.status = Status::counterexample_found;
    v.trials_run = found->trial + 1;
    v.witness = std::move(found->witness);
    v.gap = std::make_pair(std::move(found->lhs), std::move(found->rhs));
  }
  return v;
}

bool replay(const Verdict& v) {
  if (v.status == Status::no_counterexample) return !v.witness && !v.gap;
  if (!v.witness || !v.gap) return false;
  EquationValue value = eval(v.equation, *v.witness);
  return !value.holds && value.lhs == v.gap->first && value.rhs == v.gap->second;
}

// ---------------------------------------------------------------------------
// Structured witnesses

std::array<Subspace, 3> structured_triple(const Subspace& inside) {
  const std::size_t d = inside.dim();
  if (d == 0 || d % 2 != 0) {
    throw PreconditionError("structured triple needs an even, non-zero dimension; got " +
                            std::to_string(d));
  }
  const std::size_t h = d / 2;
  const std::size_t n = inside.ambient_dim();
  const Matrix& b = inside.basis();
  Matrix p(h, n), q(h, n), r(h, n);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      p(i, c) = b(i, c);
      q(i, c) = b(h + i, c);
      r(i, c) = b(i, c) + b(h + i, c);
    }
  return {Subspace::from_matrix(p), Subspace::from_matrix(q), Subspace::from_matrix(r)};
}

Assignment structured_alpha_witness(std::size_t m) {
  if (m == 0 || m % 2 != 0) {
    throw PreconditionError("structured_alpha_witness needs even m >= 2; got " + std::to_string(m));
  }
  auto [p, q, r] = structured_triple(Subspace::full(m));
  Assignment a(m);
  a.bind("p", p);
  a.bind("q", q);
  a.bind("r", r);
  return a;
}

Assignment chained_alpha_witness(std::size_t levels, std::size_t ambient) {
  const std::vector<Formula> tower = alpha_tower(levels);
  Assignment a(ambient);
  Subspace inside = Subspace::full(ambient);
  for (std::size_t k = 1; k <= levels; ++k) {
    auto triple = structured_triple(inside);
    auto names = alpha_level_vars(k);
    for (std::size_t i = 0; i < 3; ++i) a.bind(names[i], triple[i]);
    inside = eval(tower[k - 1], a);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Separation

SeparationCertificate qubit_alpha_separator(std::size_t n, std::uint64_t seed,
                                            const SearchConfig& config) {
  if (n >= 32) throw PreconditionError("qubit count too large");
  const std::size_t low = std::size_t{1} << n;
  const std::size_t high = low * 2;
  if (high > config.size_cap) {
    throw PreconditionError("C^" + std::to_string(high) + " exceeds the size cap " +
                            std::to_string(config.size_cap) + " (set QLAT_SIZE_CAP)");
  }
  const std::size_t levels = n + 1;
  const std::vector<Formula> tower = alpha_tower(levels);
  Equation separator{tower.back(), Formula::zero(), Relation::equal};

  // dim(alpha^k) <= ambient / 2^k at every sampled point.
  auto tower_bound = [&tower](const Assignment& a) {
    for (std::size_t k = 1; k <= tower.size(); ++k) {
      const std::size_t bound = a.ambient_dim() >> k;
      const std::size_t d = eval(tower[k - 1], a).dim();
      if (d > bound) {
        throw InvariantViolation("alpha level " + std::to_string(k) + " has dim " +
                                 std::to_string(d) + " > " + std::to_string(bound) + " in C^" +
                                 std::to_string(a.ambient_dim()));
      }
    }
  };

  FalsifyOptions opts{config.entry_bound, config.parallel, tower_bound};
  Verdict holds = falsify(separator, low, config.holds_trials, seed, std::nullopt, opts);
  if (holds.status == Status::counterexample_found) {
    throw InvariantViolation("alpha^" + std::to_string(levels) + " = 0 failed in C^" +
                             std::to_string(low));
  }

  Assignment witness = chained_alpha_witness(levels, high);
  tower_bound(witness);
  EquationValue value = eval(separator, witness);
  if (value.holds || value.lhs.dim() != 1) {
    throw InvariantViolation("chained alpha witness has dim " + std::to_string(value.lhs.dim()) +
                             ", expected 1");
  }
  Verdict fails{.status = Status::counterexample_found,
                .equation = separator,
                .ambient = high,
                .trials_run = 0,
                .seed = seed,
                .dims = std::nullopt,
                .witness = std::move(witness),
                .gap = std::make_pair(std::move(value.lhs), std::move(value.rhs))};
  return {low, high, "alpha_iter", separator, std::move(holds), std::move(fails)};
}

std::vector<DimRange> escalation_dims(std::size_t n) {
  // Half-dimensional draws first, then every proper dimension, then all.
  return {{1, std::max<std::size_t>(1, (n + 1) / 2)}, {1, n - 1}, {0, n}};
}

SeparationCertificate separate_dims(std::size_t m, std::size_t n, std::uint64_t seed,
                                    const SearchConfig& config) {
  if (m < 1 || m >= n) {
    throw PreconditionError("separate_dims needs 1 <= m < n; got m=" + std::to_string(m) +
                            " n=" + std::to_string(n));
  }
  if (n > config.size_cap) {
    throw PreconditionError("C^" + std::to_string(n) + " exceeds the size cap " +
                            std::to_string(config.size_cap) + " (set QLAT_SIZE_CAP)");
  }
  Equation separator = m_distributive(m);
  FalsifyOptions opts{config.entry_bound, config.parallel, {}};
  Verdict holds = falsify(separator, m, config.holds_trials, seed, std::nullopt, opts);
  if (holds.status == Status::counterexample_found) {
    throw InvariantViolation(std::to_string(m) + "-distributivity failed in C^" + std::to_string(m));
  }

  const std::vector<DimRange> phases = escalation_dims(n);
  std::optional<Verdict> last;
  for (std::size_t i = 0; i < config.escalation.size(); ++i) {
    const DimRange range = phases[std::min(i, phases.size() - 1)];
    Verdict v = falsify(separator, n, config.escalation[i], seed + i + 1, range, opts);
    if (v.status == Status::counterexample_found) {
      return {m, n, "m_distributive", separator, std::move(holds), std::move(v)};
    }
    last = std::move(v);
  }
  if (!last) throw PreconditionError("empty escalation schedule");
  throw SearchExhausted("no " + std::to_string(m) + "-distributivity counterexample in C^" +
                            std::to_string(n) + " within the escalation budget (seed " +
                            std::to_string(seed) + "); inconclusive",
                        std::move(*last));
}

Verdict lift_counterexample(const Verdict& v, std::size_t factor_dim) {
  if (v.status != Status::counterexample_found || !v.witness) {
    throw PreconditionError("only counterexample verdicts can be lifted");
  }
  const std::size_t ambient = v.ambient * factor_dim;
  Assignment lifted(ambient);
  for (const auto& [name, s] : v.witness->values()) {
    lifted.bind(name, tensor_embed(s, factor_dim, TensorSide::right));
  }
  EquationValue value = eval(v.equation, lifted);
  if (value.holds) throw InvariantViolation("lifted witness no longer separates the equation");
  Verdict out = v;
  out.ambient = ambient;
  out.dims = std::nullopt;
  out.witness = std::move(lifted);
  out.gap = std::make_pair(std::move(value.lhs), std::move(value.rhs));
  return out;
}

// ---------------------------------------------------------------------------
// Invariant audit

bool AuditReport::all_passed() const { return failures() == 0; }

std::size_t AuditReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const AuditCheck& c) { return !c.passed; }));
}

AuditReport audit_invariants(const Assignment& a) {
  AuditReport report;
  report.ambient = a.ambient_dim();
  const std::size_t n = a.ambient_dim();
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  std::vector<std::string> names;
  for (const auto& [name, _] : a.values()) names.push_back(name);

  for (const auto& x : names) {
    const Subspace& p = a.at(x);
    const Subspace op = ortho(p);
    const std::string tag = "[" + x + "]";
    add("ortho_period_two" + tag, ortho(op) == p, dims_detail({{"p", p.dim()}, {"~p", op.dim()}}));
    add("excluded_middle" + tag, join(p, op).is_full(), {});
    add("non_contradiction" + tag, meet(p, op).is_zero(), {});
  }

  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (i == j) continue;
      const Subspace& p = a.at(names[i]);
      const Subspace& q = a.at(names[j]);
      const std::string tag = "[" + names[i] + "," + names[j] + "]";
      const Subspace op = ortho(p);
      const Subspace oq = ortho(q);
      const Subspace pm = meet(p, q);
      const Subspace pj = join(p, q);
      // Sasaki form of orthomodularity, both orders.
      add("orthomodularity" + tag, leq(meet(p, join(op, pm)), q), {});
      if (i > j) continue;
      add("valuation" + tag, p.dim() + q.dim() == pj.dim() + pm.dim(),
          dims_detail({{"p", p.dim()}, {"q", q.dim()}, {"p|q", pj.dim()}, {"p&q", pm.dim()}}));
      const bool lemma_zero = meet(pj, join(op, oq)).is_zero();
      add("equality_lemma" + tag, (p == q) == lemma_zero,
          std::string("equal=") + (p == q ? "true" : "false"));
      add("de_morgan" + tag, ortho(pm) == join(op, oq), {});
      add("de_morgan_dual" + tag, ortho(pj) == meet(op, oq), {});
      const bool pq = leq(p, q);
      const bool qp = leq(q, p);
      add("order_inverting" + tag, (!pq || leq(oq, op)) && (!qp || leq(op, oq)), {});
      add("strict_monotone" + tag,
          (!pq || p == q || p.dim() < q.dim()) && (!qp || p == q || q.dim() < p.dim()), {});
    }

  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j)
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        const Subspace& p = a.at(names[i]);
        const Subspace& q = a.at(names[j]);
        const Subspace& r = a.at(names[k]);
        const std::string tag = "[" + names[i] + "," + names[j] + "," + names[k] + "]";
        const Subspace av = join(p, meet(q, r));
        const Subspace bv = meet(join(p, q), join(p, r));
        const Subspace alpha_v = meet(join(av, bv), join(ortho(av), ortho(bv)));
        add("alpha_equals_b_meet_not_a" + tag, alpha_v == meet(bv, ortho(av)), {});
        add("alpha_in_ortho_p" + tag, leq(alpha_v, ortho(p)), {});
        add("alpha_dim_le_dim_p" + tag, alpha_v.dim() <= p.dim(),
            dims_detail({{"alpha", alpha_v.dim()}, {"p", p.dim()}}));
        add("alpha_half_bound" + tag, 2 * alpha_v.dim() <= n,
            dims_detail({{"alpha", alpha_v.dim()}}) + " ambient=" + std::to_string(n));
        add("modularity" + tag,
            leq(meet(p, join(q, meet(p, r))), join(meet(p, q), r)), {});
      }

  // Bound of the alpha tower over p1,q1,r1,...,pk,qk,rk when present.
  std::size_t levels = 0;
  for (std::size_t k = 1;; ++k) {
    auto vars = alpha_level_vars(k);
    if (!a.contains(vars[0]) || !a.contains(vars[1]) || !a.contains(vars[2])) break;
    levels = k;
  }
  if (levels > 0) {
    const std::vector<Formula> tower = alpha_tower(levels);
    for (std::size_t k = 1; k <= levels; ++k) {
      const std::size_t d = eval(tower[k - 1], a).dim();
      add("alpha_tower_bound[" + std::to_string(k) + "]", (d << k) <= n,
          "dim(alpha^" + std::to_string(k) + ")=" + std::to_string(d) + " ambient=" +
              std::to_string(n));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON

Json assignment_to_json(const Assignment& a) {
  Json j = Json::object();
  for (const auto& [name, s] : a.values()) j[name] = subspace_to_json(s);
  return j;
}

Assignment assignment_from_json(const Json& j) {
  if (!j.is_object() || j.empty()) {
    throw FormatError("assignment must be a non-empty object {\"var\": subspace}");
  }
  std::optional<Assignment> a;
  for (const auto& [name, value] : j.items()) {
    if (!is_identifier(name)) throw FormatError("invalid variable name '" + name + "'");
    Subspace s = subspace_from_json(value);
    if (!a) a.emplace(s.ambient_dim());
    if (s.ambient_dim() != a->ambient_dim()) {
      throw FormatError("variable '" + name + "' has ambient " + std::to_string(s.ambient_dim()) +
                        ", expected " + std::to_string(a->ambient_dim()));
    }
    a->bind(name, std::move(s));
  }
  return std::move(*a);
}

Json verdict_to_json(const Verdict& v) {
  Json j = Json::object();
  j["version"] = kVersion;
  j["status"] = to_string(v.status);
  j["equation"] = to_string(v.equation);
  j["ambient"] = v.ambient;
  j["trials"] = v.trials_run;
  j["seed"] = v.seed;
  j["dims"] = v.dims ? Json::array({v.dims->lo, v.dims->hi}) : Json(nullptr);
  j["witness"] = v.witness ? assignment_to_json(*v.witness) : Json(nullptr);
  if (v.gap) {
    j["gap"] = {{"lhs", subspace_to_json(v.gap->first)}, {"rhs", subspace_to_json(v.gap->second)}};
  } else {
    j["gap"] = nullptr;
  }
  return j;
}

Verdict verdict_from_json(const Json& j) {
  try {
    const std::string status = j.at("status").get<std::string>();
    Status s;
    if (status == "counterexample_found") {
      s = Status::counterexample_found;
    } else if (status == "no_counterexample") {
      s = Status::no_counterexample;
    } else {
      throw FormatError("unknown status '" + status + "'");
    }
    Verdict v{.status = s,
              .equation = parse_equation(j.at("equation").get<std::string>()),
              .ambient = j.at("ambient").get<std::size_t>(),
              .trials_run = j.at("trials").get<std::size_t>(),
              .seed = j.at("seed").get<std::uint64_t>(),
              .dims = std::nullopt,
              .witness = std::nullopt,
              .gap = std::nullopt};
    if (j.contains("dims") && !j["dims"].is_null()) {
      v.dims = DimRange{j["dims"].at(0).get<std::size_t>(), j["dims"].at(1).get<std::size_t>()};
    }
    if (j.contains("witness") && !j["witness"].is_null()) {
      v.witness = assignment_from_json(j["witness"]);
    }
    if (j.contains("gap") && !j["gap"].is_null()) {
      v.gap = std::make_pair(subspace_from_json(j["gap"].at("lhs")),
                             subspace_from_json(j["gap"].at("rhs")));
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed verdict: ") + e.what());
  }
}

Json certificate_to_json(const SeparationCertificate& c) {
  Json j = Json::object();
  j["version"] = kVersion;
  j["low_dim"] = c.low_dim;
  j["high_dim"] = c.high_dim;
  j["route"] = c.route;
  j["separator"] = to_string(c.separator);
  j["holds_evidence"] = verdict_to_json(c.holds_evidence);
  j["fails_witness"] = verdict_to_json(c.fails_witness);
  return j;
}

Json audit_to_json(const AuditReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"ambient", r.ambient}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

}  // namespace qlat
