#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlat/error.hpp"
#include "qlat/formula.hpp"
#include "qlat/json_io.hpp"
#include "qlat/subspace.hpp"

namespace qlat {

inline constexpr const char* kVersion = "0.3.1";

/// Sampling never proves validity, so there is no "tautology" status.
enum class Status { counterexample_found, no_counterexample };

const char* to_string(Status s);

/// Inclusive range of subspace dimensions drawn per variable.
struct DimRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
  friend bool operator==(const DimRange&, const DimRange&) = default;
};

/// Outcome of one batch of evaluations.
struct Verdict {
  Status status = Status::no_counterexample;
  Equation equation;
  std::size_t ambient = 1;
  /// For a counterexample, the 1-based index of the witnessing trial.
  std::size_t trials_run = 0;
  std::uint64_t seed = 0;
  std::optional<DimRange> dims;
  std::optional<Assignment> witness;
  /// Values of (lhs, rhs) at the witness.
  std::optional<std::pair<Subspace, Subspace>> gap;
};

struct SeparationCertificate {
  std::size_t low_dim = 0;
  std::size_t high_dim = 0;
  /// "alpha_iter" or "m_distributive".
  std::string route;
  Equation separator;
  Verdict holds_evidence;
  Verdict fails_witness;
};

/// Tunables. Defaults are part of the CLI contract.
struct SearchConfig {
  long entry_bound = 3;
  std::size_t size_cap = 16;
  /// Trial budgets of the successive counterexample-search phases.
  std::vector<std::size_t> escalation = {1000, 10000, 100000};
  /// Trials spent confirming the separator in the low dimension.
  std::size_t holds_trials = 500;
  bool parallel = false;

  /// Defaults, with size_cap overridden by QLAT_SIZE_CAP when set.
  static SearchConfig from_env();
};

/// Raised when a counterexample search spends its whole budget. The search
/// is inconclusive; it is never reported as evidence of validity.
class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& message, Verdict last)
      : Error(message), last_(std::move(last)) {}
  const Verdict& last() const { return last_; }

 private:
  Verdict last_;
};

/// Per-trial seed: a fixed mix of (seed, trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Called on every sampled assignment before the equation is tested.
using TrialAudit = std::function<void(const Assignment&)>;

struct FalsifyOptions {
  long entry_bound = 3;
  bool parallel = false;
  TrialAudit audit;
};

/// Tests `eq` at `trials` seeded random assignments in C^ambient. Each
/// variable (in sorted order) gets a dimension uniform in `dims`
/// (default [0, ambient]). Returns the lowest-index counterexample, so the
/// result is the same with or without `parallel`.
Verdict falsify(const Equation& eq, std::size_t ambient, std::size_t trials, std::uint64_t seed,
                std::optional<DimRange> dims = std::nullopt, const FalsifyOptions& options = {});

/// Assignment used by trial `trial` of falsify.
Assignment trial_assignment(const std::vector<std::string>& vars, std::size_t ambient,
                            std::uint64_t seed, std::uint64_t trial, DimRange dims,
                            long entry_bound);

/// Re-evaluates the witness and checks it reproduces the recorded gap.
bool replay(const Verdict& v);

/// Half-dimensional triple inside `inside` built from its canonical basis
/// b_1..b_2h: p = <b_1..b_h>, q = <b_h+1..b_2h>, r = <b_i + b_h+i>.
/// Pairwise meets are 0. Requires even, non-zero dimension.
std::array<Subspace, 3> structured_triple(const Subspace& inside);

/// The structured triple {p, q, r} spanning all of C^m, m even.
Assignment structured_alpha_witness(std::size_t m);

/// Witness for alpha_iter(levels) in C^ambient: level 1 is the structured
/// triple of the whole space and level k the structured triple inside the
/// value of level k - 1.
Assignment chained_alpha_witness(std::size_t levels, std::size_t ambient);

/// alpha_iter(n + 1) = 0 holds in C^(2^n) and fails in C^(2^(n+1)).
SeparationCertificate qubit_alpha_separator(std::size_t n, std::uint64_t seed,
                                            const SearchConfig& config = {});

/// Dimension search phases used by separate_dims when looking for an
/// m-distributivity counterexample in C^n.
std::vector<DimRange> escalation_dims(std::size_t n);

/// m_distributive(m) holds in C^m and fails in C^n. Throws SearchExhausted
/// if no counterexample turns up within the escalation budget.
SeparationCertificate separate_dims(std::size_t m, std::size_t n, std::uint64_t seed,
                                    const SearchConfig& config = {});

/// Embeds every witness subspace as p (x) C^factor and re-evaluates.
Verdict lift_counterexample(const Verdict& v, std::size_t factor_dim);

struct AuditCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct AuditReport {
  std::size_t ambient = 0;
  std::vector<AuditCheck> checks;
  bool all_passed() const;
  std::size_t failures() const;
};

/// Ortholattice laws, valuation identity, equality lemma and alpha bounds
/// at every variable, pair and ordered triple of the assignment.
AuditReport audit_invariants(const Assignment& a);

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);
Json certificate_to_json(const SeparationCertificate& c);
Json audit_to_json(const AuditReport& r);
Json assignment_to_json(const Assignment& a);
/// {"var": Subspace-JSON, ...}; all subspaces must share one ambient.
Assignment assignment_from_json(const Json& j);

}  // namespace qlat
