// qlat: command line front end for the subspace-lattice logic and
// Temperley-Lieb tooling. JSON output (--json) is the machine contract;
// the default human output renders the same data.
//
// Exit codes: 0 success or no counterexample, 1 counterexample found or a
// documented bound violated, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "qlat/error.hpp"
#include "qlat/formula.hpp"
#include "qlat/generators.hpp"
#include "qlat/json_io.hpp"
#include "qlat/search.hpp"
#include "qlat/temperley_lieb.hpp"

namespace {

using qlat::Json;

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::size_t dim = 2;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  long entry_bound = 3;
  bool json = false;
  bool parallel = false;
};

class UsageError : public qlat::Error {
 public:
  using Error::Error;
};

void emit(const RunConfig& cfg, Json report, const std::string& human) {
  if (cfg.json) {
    if (!report.contains("version")) report["version"] = qlat::kVersion;
    if (!report.contains("seed")) report["seed"] = cfg.seed;
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << human;
  }
}

// Iterated formulas run to many kilobytes; human output shows a prefix.
std::string abbreviate(const std::string& text) {
  constexpr std::size_t kMax = 160;
  if (text.size() <= kMax) return text;
  return text.substr(0, kMax) + " ... (" + std::to_string(text.size()) + " chars, use --json)";
}

std::string describe(const qlat::Subspace& s) {
  std::ostringstream os;
  os << "dim " << s.dim() << " in C^" << s.ambient_dim();
  if (s.is_zero()) {
    os << " (zero)";
  } else if (s.is_full()) {
    os << " (full space)";
  }
  os << '\n';
  for (std::size_t r = 0; r < s.dim(); ++r) {
    os << "  (";
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
      os << (c ? ", " : "") << s.basis()(r, c).to_string();
    }
    os << ")\n";
  }
  return os.str();
}

std::string describe(const qlat::Verdict& v) {
  std::ostringstream os;
  os << "equation: " << abbreviate(qlat::to_string(v.equation)) << '\n'
     << "ambient:  C^" << v.ambient << '\n'
     << "seed:     " << v.seed << '\n'
     << "status:   " << qlat::to_string(v.status) << '\n'
     << "trials:   " << v.trials_run << '\n';
  if (v.witness) {
    for (const auto& [name, s] : v.witness->values()) os << name << " = " << describe(s);
    os << "lhs = " << describe(v.gap->first) << "rhs = " << describe(v.gap->second);
  } else {
    os << "no counterexample found (this is not a proof of validity)\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_eval(const RunConfig& cfg, const std::string& text, const std::string& assignment_path) {
  const qlat::Formula f = qlat::parse_formula(text);
  Json doc;
  try {
    doc = Json::parse(read_file(assignment_path));
  } catch (const Json::parse_error& e) {
    throw qlat::FormatError(std::string("assignment is not valid JSON: ") + e.what());
  }
  const qlat::Assignment a = qlat::assignment_from_json(doc);
  const qlat::Subspace value = qlat::eval(f, a);
  const qlat::AuditReport audit = qlat::audit_invariants(a);

  Json report = {{"formula", qlat::to_string(f)},
                 {"ambient", a.ambient_dim()},
                 {"result", qlat::subspace_to_json(value)},
                 {"dim", value.dim()},
                 {"audit", qlat::audit_to_json(audit)}};
  std::ostringstream human;
  human << "formula: " << qlat::to_string(f) << '\n' << "result:  " << describe(value);
  human << "audit:   " << audit.checks.size() - audit.failures() << "/" << audit.checks.size()
        << " invariants hold\n";
  for (const auto& c : audit.checks) {
    if (!c.passed) human << "  FAILED " << c.name << ' ' << c.detail << '\n';
  }
  emit(cfg, report, human.str());
  return audit.all_passed() ? kOk : kFound;
}

int run_falsify(const RunConfig& cfg, const qlat::Equation& eq) {
  qlat::SearchConfig limits = qlat::SearchConfig::from_env();
  if (cfg.dim == 0 || cfg.dim > limits.size_cap) {
    throw UsageError("--dim must be in 1.." + std::to_string(limits.size_cap));
  }
  if (cfg.trials == 0) throw UsageError("--trials must be positive");
  qlat::FalsifyOptions opts{cfg.entry_bound, cfg.parallel, {}};
  const qlat::Verdict v = qlat::falsify(eq, cfg.dim, cfg.trials, cfg.seed, std::nullopt, opts);
  emit(cfg, qlat::verdict_to_json(v), describe(v));
  return v.status == qlat::Status::counterexample_found ? kFound : kOk;
}

int cmd_check_law(const RunConfig& cfg, const std::string& what) {
  const auto& names = qlat::law_names();
  if (std::find(names.begin(), names.end(), what) != names.end()) {
    return run_falsify(cfg, qlat::law(what));
  }
  if (qlat::is_identifier(what)) {
    std::string known;
    for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown law '" + what + "' (known: " + known + ")");
  }
  return run_falsify(cfg, qlat::parse_equation(what));
}

std::optional<std::size_t> power_of_two_exponent(std::size_t v) {
  if (v == 0 || (v & (v - 1)) != 0) return std::nullopt;
  std::size_t k = 0;
  while ((std::size_t{1} << k) != v) ++k;
  return k;
}

int cmd_separate(const RunConfig& cfg, std::size_t m, std::size_t n) {
  if (m < 1 || m >= n) throw UsageError("separate needs 1 <= m < n");
  qlat::SearchConfig config = qlat::SearchConfig::from_env();
  config.entry_bound = cfg.entry_bound;
  config.parallel = cfg.parallel;
  if (n > config.size_cap) {
    throw UsageError("C^" + std::to_string(n) + " exceeds the size cap " +
                     std::to_string(config.size_cap) + " (set QLAT_SIZE_CAP)");
  }
  auto k = power_of_two_exponent(m);
  qlat::SeparationCertificate cert = [&] {
    if (k && n == 2 * m) return qlat::qubit_alpha_separator(*k, cfg.seed, config);
    return qlat::separate_dims(m, n, cfg.seed, config);
  }();

  std::ostringstream human;
  human << "separator (" << cert.route << "): " << abbreviate(qlat::to_string(cert.separator)) << '\n'
        << "holds in C^" << cert.low_dim << ": no counterexample in "
        << cert.holds_evidence.trials_run << " trials\n"
        << "fails in C^" << cert.high_dim << ":\n"
        << describe(cert.fails_witness);
  emit(cfg, qlat::certificate_to_json(cert), human.str());
  return kOk;
}

int cmd_print(const RunConfig& cfg, const std::string& kind, std::size_t m) {
  if (m == 0) throw UsageError(kind + " needs m >= 1");
  std::string source;
  if (kind == "alpha") {
    source = qlat::to_string(qlat::alpha_iter(m));
  } else {
    source = qlat::to_string(qlat::m_distributive(m));
  }
  emit(cfg, {{"kind", kind}, {"m", m}, {"source", source}}, source + "\n");
  return kOk;
}

Json relation_check(const std::string& name, bool ok) { return {{"relation", name}, {"passed", ok}}; }

int cmd_tl_relations(const RunConfig& cfg, std::size_t n) {
  if (n < 1) throw UsageError("--n must be >= 1");
  using qlat::generator_e;
  const qlat::RationalFunction inv_d2 = qlat::RationalFunction::d().pow(-2);
  Json checks = Json::array();
  std::ostringstream human;
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back(relation_check(name, ok));
    human << (ok ? "ok     " : "FAILED ") << name << '\n';
    all = all && ok;
  };
  for (std::size_t i = 1; i < n; ++i) {
    const auto ei = generator_e(n, i);
    record("e" + std::to_string(i) + "^2 = e" + std::to_string(i), ei * ei == ei);
    for (std::size_t j = 1; j < n; ++j) {
      const auto ej = generator_e(n, j);
      const std::string si = std::to_string(i), sj = std::to_string(j);
      if (i + 1 == j || j + 1 == i) {
        record("e" + si + " e" + sj + " e" + si + " = e" + si + "/d^2", ei * ej * ei == inv_d2 * ei);
      } else if (i + 2 <= j) {
        record("e" + si + " e" + sj + " = e" + sj + " e" + si, ei * ej == ej * ei);
      }
    }
  }
  human << (all ? "all relations hold in TL_" : "relation failures in TL_") << n << '\n';
  emit(cfg, {{"command", "tl relations"}, {"n", n}, {"checks", checks}, {"all_passed", all}},
       human.str());
  return all ? kOk : kFound;
}

int cmd_tl_jw(const RunConfig& cfg, std::size_t n, std::optional<std::size_t> r) {
  if (n < 1) throw UsageError("--n must be >= 1");
  if (r && *r < 3) throw UsageError("--r must be >= 3");
  if (r && n > *r - 1) {
    const std::string msg = "Jones-Wenzl projectors at level r=" + std::to_string(*r) +
                            " exist only for n = 1, ..., r-1 = " + std::to_string(*r - 1) +
                            "; n=" + std::to_string(n) + " rejected";
    emit(cfg, {{"command", "tl jw"}, {"n", n}, {"r", *r}, {"error", msg}}, msg + "\n");
    return kFound;
  }
  const qlat::TLElement p = qlat::jones_wenzl(n);
  const qlat::RationalFunction tr = qlat::markov_trace(p);
  const qlat::RationalFunction expected =
      qlat::RationalFunction(qlat::chebyshev(n).poly) * qlat::RationalFunction::d().pow(-static_cast<long>(n));
  Json report = {{"command", "tl jw"},
                 {"n", n},
                 {"projector", qlat::tl_element_to_json(p)},
                 {"trace", qlat::rational_function_to_json(tr)},
                 {"trace_matches_chebyshev", tr == expected}};
  std::ostringstream human;
  human << "p_" << n << " has " << p.terms().size() << " terms\n"
        << "tr(p_" << n << ") = " << tr.to_string() << '\n'
        << "Delta_" << n << "(d)/d^" << n << " = " << expected.to_string()
        << (tr == expected ? "  (match)\n" : "  (MISMATCH)\n");
  bool ok = tr == expected;
  if (r) {
    const qlat::NumericTLElement num = qlat::jw_at_root(n, *r);
    const double d = qlat::root_params(*r).d;
    const double tr_num = qlat::markov_trace(num);
    const double formula = qlat::chebyshev(n).poly.evaluate(d) / std::pow(d, static_cast<double>(n));
    const bool close = std::fabs(tr_num - formula) <= 1e-9;
    ok = ok && close;
    report["r"] = *r;
    report["d"] = d;
    report["numeric_projector"] = qlat::numeric_tl_element_to_json(num);
    report["numeric_trace"] = tr_num;
    report["numeric_trace_formula"] = formula;
    report["numeric_trace_matches"] = close;
    human << "at r=" << *r << ", d=2cos(pi/r)=" << d << ": tr(p_" << n << ") = " << tr_num
          << ", Delta_" << n << "(d)/d^" << n << " = " << formula << (close ? "  (match)\n" : "  (MISMATCH)\n");
  }
  emit(cfg, report, human.str());
  return ok ? kOk : kFound;
}

int cmd_tl_trace(const RunConfig& cfg, std::size_t n, std::optional<std::size_t> r) {
  if (n < 2) throw UsageError("tl trace needs --n >= 2");
  if (r && *r < 3) throw UsageError("--r must be >= 3");
  Json entries = Json::array();
  std::ostringstream human;
  bool ok = true;
  const qlat::RationalFunction inv_d2 = qlat::RationalFunction::d().pow(-2);
  for (std::size_t i = 1; i < n; ++i) {
    const auto tr = qlat::markov_trace(qlat::generator_e(n, i));
    Json e = {{"element", "e" + std::to_string(i)}, {"trace", tr.to_string()}, {"expected", inv_d2.to_string()}};
    ok = ok && tr == inv_d2;
    human << "tr(e_" << i << ") = " << tr.to_string();
    if (r) {
      const double v = qlat::eval_at_root(tr, *r);
      const double sec = 1.0 / std::cos(std::numbers::pi / static_cast<double>(*r));
      e["numeric"] = v;
      e["numeric_expected"] = 0.25 * sec * sec;
      human << " = " << v << " at r=" << *r;
    }
    human << '\n';
    entries.push_back(e);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    if (r && j > *r - 1) break;
    const auto tr = qlat::markov_trace(qlat::jones_wenzl(j));
    const qlat::RationalFunction expected =
        qlat::RationalFunction(qlat::chebyshev(j).poly) * qlat::RationalFunction::d().pow(-static_cast<long>(j));
    ok = ok && tr == expected;
    Json e = {{"element", "p" + std::to_string(j)}, {"trace", tr.to_string()}, {"expected", expected.to_string()}};
    human << "tr(p_" << j << ") = " << tr.to_string();
    if (r) {
      const double v = qlat::eval_at_root(tr, *r);
      e["numeric"] = v;
      human << " = " << v << " at r=" << *r;
    }
    human << '\n';
    entries.push_back(e);
  }
  Json report = {{"command", "tl trace"}, {"n", n}, {"traces", entries}, {"all_match", ok}};
  if (r) report["r"] = *r;
  emit(cfg, report, human.str());
  return ok ? kOk : kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum logic of qubit registers: subspace lattices, tautology search, Temperley-Lieb"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--dim", cfg.dim, "Ambient dimension n of C^n")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random trials per search")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed of the trial stream")->capture_default_str();
  app.add_option("--entry-bound", cfg.entry_bound, "Bound on Gaussian-integer sample entries")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_flag("--parallel", cfg.parallel, "Run trials on all cores (same reported witness)");

  std::string formula_text, assignment_path, law_text, equation_text;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula at an assignment file");
  eval->add_option("formula", formula_text, "Formula source")->required();
  eval->add_option("assignment", assignment_path, "Assignment JSON {var: subspace}")->required();

  auto* check = app.add_subcommand("check-law", "Search for a counterexample to a catalog law or equation");
  check->add_option("law", law_text, "Law name or equation source")->required();

  auto* falsify = app.add_subcommand("falsify", "Search for a counterexample to an equation");
  falsify->add_option("equation", equation_text, "Equation source, e.g. 'x & (y | z) <= x & y | x & z'")
      ->required();

  std::size_t sep_m = 0, sep_n = 0;
  auto* separate = app.add_subcommand("separate", "Certificate that the logics of C^m and C^n differ");
  separate->add_option("m", sep_m)->required();
  separate->add_option("n", sep_n)->required();

  std::size_t print_m = 1;
  auto* alpha = app.add_subcommand("alpha", "Print the iterated distribution test formula");
  alpha->add_option("m", print_m, "Iteration depth")->required();
  auto* mdist = app.add_subcommand("mdist", "Print the m-distributive law");
  mdist->add_option("m", print_m, "m")->required();

  std::size_t tl_n = 2;
  std::optional<std::size_t> tl_r;
  auto* tl = app.add_subcommand("tl", "Temperley-Lieb algebra checks");
  tl->require_subcommand(1);
  tl->fallthrough();
  auto* tl_rel = tl->add_subcommand("relations", "Check the defining relations in TL_n");
  auto* tl_jw = tl->add_subcommand("jw", "Jones-Wenzl projector p_n");
  auto* tl_tr = tl->add_subcommand("trace", "Markov traces of e_i and p_j");
  for (auto* sub : {tl_rel, tl_jw, tl_tr}) {
    sub->add_option("--n", tl_n, "Strand count")->required();
    sub->add_option("--r", tl_r, "Root of unity level r >= 3");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(cfg, formula_text, assignment_path);
    if (*check) return cmd_check_law(cfg, law_text);
    if (*falsify) return run_falsify(cfg, qlat::parse_equation(equation_text));
    if (*separate) return cmd_separate(cfg, sep_m, sep_n);
    if (*alpha) return cmd_print(cfg, "alpha", print_m);
    if (*mdist) return cmd_print(cfg, "mdist", print_m);
    if (*tl_rel) return cmd_tl_relations(cfg, tl_n);
    if (*tl_jw) return cmd_tl_jw(cfg, tl_n, tl_r);
    if (*tl_tr) return cmd_tl_trace(cfg, tl_n, tl_r);
  } catch (const qlat::SearchExhausted& e) {
    Json report = {{"status", "inconclusive"}, {"message", e.what()},
                   {"last", qlat::verdict_to_json(e.last())}};
    emit(cfg, report, std::string("inconclusive: ") + e.what() + "\n");
    return kFound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
