#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "qlat/subspace.hpp"

namespace qlat {

enum class Op { var, zero, one, negation, conj, disj };

/// Immutable formula tree. Subtrees are shared, so formulas built by
/// substitution (restriction, iterated alpha) are DAGs whose size stays
/// linear in the construction depth.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula zero();
  static Formula one();

  Op op() const { return node_->op; }
  /// Variable name; empty for other nodes.
  const std::string& name() const { return node_->name; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }
  /// Operand of a negation.
  const Formula& child() const { return *node_->left; }

  /// Node identity, for memoization over shared subtrees.
  const void* id() const { return node_.get(); }

  friend Formula operator~(const Formula& f);
  friend Formula operator&(const Formula& a, const Formula& b);
  friend Formula operator|(const Formula& a, const Formula& b);

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Op op;
    std::string name;
    std::unique_ptr<Formula> left;
    std::unique_ptr<Formula> right;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::string name, const Formula* l, const Formula* r);

  std::shared_ptr<const Node> node_;
};

enum class Relation { equal, leq };

struct Equation {
  Formula lhs;
  Formula rhs;
  Relation relation = Relation::equal;
};

bool operator==(const Equation& a, const Equation& b);

/// Variables bound to subspaces of a common ambient space.
class Assignment {
 public:
  explicit Assignment(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient_dim() const { return ambient_; }
  /// Throws DimensionError if `value` lives in another ambient space.
  void bind(const std::string& name, Subspace value);
  /// Throws UnboundVariable.
  const Subspace& at(const std::string& name) const;
  bool contains(const std::string& name) const { return values_.count(name) != 0; }
  const std::map<std::string, Subspace>& values() const { return values_; }

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.ambient_ == b.ambient_ && a.values_ == b.values_;
  }

 private:
  std::size_t ambient_;
  std::map<std::string, Subspace> values_;
};

bool is_identifier(std::string_view s);

/// Grammar (whitespace between tokens is ignored):
///
///   equation := formula (("=" | "<=") formula)?
///   formula  := conj { "|" conj }
///   conj     := atom { "&" atom }
///   atom     := "~" atom | "0" | "1" | ident | "(" formula ")"
///   ident    := letter { letter | digit | "_" }
///
/// The Unicode connectives U+2227, U+2228 and U+00AC are read as &, | and ~.
Formula parse_formula(std::string_view text);
/// Requires a relation.
Equation parse_equation(std::string_view text);
std::variant<Formula, Equation> parse(std::string_view text);

/// Prints with the fewest parentheses that still parse back to `f`.
std::string to_string(const Formula& f);
std::string to_string(const Equation& eq);

std::set<std::string> variables(const Formula& f);
std::set<std::string> variables(const Equation& eq);

/// Number of nodes in the expanded tree (shared subtrees counted each time).
std::size_t tree_size(const Formula& f);

/// Negation normal form: negations only wrap variables.
Formula to_nnf(const Formula& f);

/// Relativization to `beta`: after normalization, each u becomes u & beta,
/// each ~u becomes ~(u & beta) & beta, 1 becomes beta and 0 stays 0.
Formula restrict(const Formula& f, const Formula& beta);

/// Substitutes formulas for variables. Unmapped variables are kept.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& bindings);

/// Evaluates in the subspace lattice: & meet, | join, ~ orthocomplement.
/// Shared subtrees are evaluated once.
Subspace eval(const Formula& f, const Assignment& a);

struct EquationValue {
  Subspace lhs;
  Subspace rhs;
  bool holds;
};

/// Both sides plus the verdict; s <= t is tested as s & t = s.
EquationValue eval(const Equation& eq, const Assignment& a);

}  // namespace qlat
