#include "qlat/formula.hpp"

#include <cctype>
#include <unordered_map>

#include "qlat/error.hpp"

namespace qlat {

Formula Formula::make(Op op, std::string name, const Formula* l, const Formula* r) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  if (l) node->left = std::make_unique<Formula>(*l);
  if (r) node->right = std::make_unique<Formula>(*r);
  return Formula(std::move(node));
}

Formula Formula::var(std::string name) {
  if (!is_identifier(name)) throw PreconditionError("invalid variable name '" + name + "'");
  return make(Op::var, std::move(name), nullptr, nullptr);
}

Formula Formula::zero() {
  static const Formula z = make(Op::zero, {}, nullptr, nullptr);
  return z;
}

Formula Formula::one() {
  static const Formula o = make(Op::one, {}, nullptr, nullptr);
  return o;
}

Formula operator~(const Formula& f) { return Formula::make(Op::negation, {}, &f, nullptr); }
Formula operator&(const Formula& a, const Formula& b) { return Formula::make(Op::conj, {}, &a, &b); }
Formula operator|(const Formula& a, const Formula& b) { return Formula::make(Op::disj, {}, &a, &b); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.id() == b.id()) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::var:
      return a.name() == b.name();
    case Op::zero:
    case Op::one:
      return true;
    case Op::negation:
      return a.child() == b.child();
    case Op::conj:
    case Op::disj:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool operator==(const Equation& a, const Equation& b) {
  return a.relation == b.relation && a.lhs == b.lhs && a.rhs == b.rhs;
}

void Assignment::bind(const std::string& name, Subspace value) {
  if (value.ambient_dim() != ambient_) {
    throw DimensionError("variable '" + name + "' lives in C^" +
                         std::to_string(value.ambient_dim()) + ", assignment is over C^" +
                         std::to_string(ambient_));
  }
  values_.insert_or_assign(name, std::move(value));
}

const Subspace& Assignment::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw UnboundVariable(name);
  return it->second;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { ident, zero, one, neg, conj, disj, lparen, rparen, eq, leq, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (std::isalpha(c)) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::ident, std::string(s.substr(at, i - at)), at});
      continue;
    }
    if (std::isdigit(c)) {
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
      std::string_view lit = s.substr(at, i - at);
      if (lit == "0") {
        out.push_back({Tok::zero, "0", at});
      } else if (lit == "1") {
        out.push_back({Tok::one, "1", at});
      } else {
        throw ParseError("unexpected literal '" + std::string(lit) + "'", at);
      }
      continue;
    }
    if (starts("<=")) {
      out.push_back({Tok::leq, "<=", at});
      i += 2;
    } else if (starts("∧")) {
      out.push_back({Tok::conj, "&", at});
      i += 3;
    } else if (starts("∨")) {
      out.push_back({Tok::disj, "|", at});
      i += 3;
    } else if (starts("¬")) {
      out.push_back({Tok::neg, "~", at});
      i += 2;
    } else {
      Tok kind;
      switch (c) {
        case '~': kind = Tok::neg; break;
        case '&': kind = Tok::conj; break;
        case '|': kind = Tok::disj; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case '=': kind = Tok::eq; break;
        default:
          throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'",
                           at);
      }
      out.push_back({kind, std::string(1, static_cast<char>(c)), at});
      ++i;
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {
    if (tokens_.size() == 1) throw ParseError("empty input", 0);
  }

  std::variant<Formula, Equation> equation() {
    Formula lhs = formula();
    const Token& t = peek();
    if (t.kind == Tok::eq || t.kind == Tok::leq) {
      Relation rel = t.kind == Tok::eq ? Relation::equal : Relation::leq;
      ++pos_;
      Formula rhs = formula();
      expect_end();
      return Equation{lhs, rhs, rel};
    }
    expect_end();
    return lhs;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  void expect_end() {
    const Token& t = peek();
    if (t.kind == Tok::rparen) throw ParseError("unbalanced ')'", t.pos);
    if (t.kind != Tok::end) throw ParseError("unexpected '" + t.text + "'", t.pos);
  }

  Formula formula() {
    Formula f = conj();
    while (peek().kind == Tok::disj) {
      ++pos_;
      f = f | conj();
    }
    return f;
  }

  Formula conj() {
    Formula f = atom();
    while (peek().kind == Tok::conj) {
      ++pos_;
      f = f & atom();
    }
    return f;
  }

  Formula atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::neg:
        ++pos_;
        return ~atom();
      case Tok::zero:
        ++pos_;
        return Formula::zero();
      case Tok::one:
        ++pos_;
        return Formula::one();
      case Tok::ident:
        ++pos_;
        return Formula::var(t.text);
      case Tok::lparen: {
        ++pos_;
        Formula f = formula();
        if (peek().kind != Tok::rparen) {
          if (peek().kind == Tok::end) throw ParseError("unbalanced '(' opened", t.pos);
          throw ParseError("expected ')' but found '" + peek().text + "'", peek().pos);
        }
        ++pos_;
        return f;
      }
      case Tok::end:
        throw ParseError("unexpected end of input", t.pos);
      case Tok::rparen:
        throw ParseError("unbalanced ')'", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::variant<Formula, Equation> parse(std::string_view text) { return Parser(text).equation(); }

Formula parse_formula(std::string_view text) {
  auto r = parse(text);
  if (auto* f = std::get_if<Formula>(&r)) return *f;
  throw ParseError("expected a formula, found an equation", 0);
}

Equation parse_equation(std::string_view text) {
  auto r = parse(text);
  if (auto* e = std::get_if<Equation>(&r)) return *e;
  throw ParseError("expected '=' or '<='", text.size());
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::disj: return 1;
    case Op::conj: return 2;
    default: return 3;
  }
}

void print(const Formula& f, std::string& out) {
  auto operand = [&](const Formula& g, int min_prec) {
    if (precedence(g) < min_prec) {
      out += '(';
      print(g, out);
      out += ')';
    } else {
      print(g, out);
    }
  };
  switch (f.op()) {
    case Op::var:
      out += f.name();
      break;
    case Op::zero:
      out += '0';
      break;
    case Op::one:
      out += '1';
      break;
    case Op::negation:
      out += '~';
      operand(f.child(), 3);
      break;
    case Op::conj:
    case Op::disj: {
      // Left-associative: a right operand of equal precedence needs parens.
      const int p = precedence(f);
      operand(f.left(), p);
      out += f.op() == Op::conj ? " & " : " | ";
      operand(f.right(), p + 1);
      break;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string to_string(const Equation& eq) {
  return to_string(eq.lhs) + (eq.relation == Relation::equal ? " = " : " <= ") + to_string(eq.rhs);
}

// ---------------------------------------------------------------------------
// Structural utilities

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out,
                  std::unordered_map<const void*, bool>& seen) {
  if (!seen.emplace(f.id(), true).second) return;
  switch (f.op()) {
    case Op::var:
      out.insert(f.name());
      break;
    case Op::negation:
      collect_vars(f.child(), out, seen);
      break;
    case Op::conj:
    case Op::disj:
      collect_vars(f.left(), out, seen);
      collect_vars(f.right(), out, seen);
      break;
    default:
      break;
  }
}

}  // namespace

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  std::unordered_map<const void*, bool> seen;
  collect_vars(f, out, seen);
  return out;
}

std::set<std::string> variables(const Equation& eq) {
  std::set<std::string> out = variables(eq.lhs);
  out.merge(variables(eq.rhs));
  return out;
}

std::size_t tree_size(const Formula& f) {
  std::unordered_map<const void*, std::size_t> memo;
  auto go = [&](auto& self, const Formula& g) -> std::size_t {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    std::size_t n = 1;
    if (g.op() == Op::negation) n += self(self, g.child());
    if (g.op() == Op::conj || g.op() == Op::disj) n += self(self, g.left()) + self(self, g.right());
    memo.emplace(g.id(), n);
    return n;
  };
  return go(go, f);
}

namespace {

struct NnfBuilder {
  // Keyed by (node, negated); keeps shared subtrees shared.
  std::map<std::pair<const void*, bool>, Formula> memo;

  Formula build(const Formula& f, bool negated) {
    auto key = std::make_pair(f.id(), negated);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Formula out = compute(f, negated);
    memo.emplace(key, out);
    return out;
  }

  Formula compute(const Formula& f, bool negated) {
    switch (f.op()) {
      case Op::var:
        return negated ? ~f : f;
      case Op::zero:
        return negated ? Formula::one() : f;
      case Op::one:
        return negated ? Formula::zero() : f;
      case Op::negation:
        return build(f.child(), !negated);
      case Op::conj:
      case Op::disj: {
        Formula l = build(f.left(), negated);
        Formula r = build(f.right(), negated);
        const bool is_conj = (f.op() == Op::conj) != negated;
        return is_conj ? (l & r) : (l | r);
      }
    }
    throw InvariantViolation("unknown formula node");
  }
};

}  // namespace

Formula to_nnf(const Formula& f) {
  NnfBuilder b;
  return b.build(f, false);
}

Formula restrict(const Formula& f, const Formula& beta) {
  const Formula nnf = to_nnf(f);
  std::unordered_map<const void*, Formula> memo;
  std::map<std::string, Formula> inside;   // u & beta, shared per variable
  auto restricted_var = [&](const std::string& name) -> const Formula& {
    auto it = inside.find(name);
    if (it == inside.end()) it = inside.emplace(name, Formula::var(name) & beta).first;
    return it->second;
  };
  auto go = [&](auto& self, const Formula& g) -> Formula {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    Formula out = g;
    switch (g.op()) {
      case Op::var:
        out = restricted_var(g.name());
        break;
      case Op::zero:
        break;
      case Op::one:
        out = beta;
        break;
      case Op::negation:
        // NNF guarantees the operand is a variable.
        out = ~restricted_var(g.child().name()) & beta;
        break;
      case Op::conj:
        out = self(self, g.left()) & self(self, g.right());
        break;
      case Op::disj:
        out = self(self, g.left()) | self(self, g.right());
        break;
    }
    memo.emplace(g.id(), out);
    return out;
  };
  return go(go, nnf);
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& bindings) {
  std::unordered_map<const void*, Formula> memo;
  auto go = [&](auto& self, const Formula& g) -> Formula {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    Formula out = g;
    switch (g.op()) {
      case Op::var:
        if (auto b = bindings.find(g.name()); b != bindings.end()) out = b->second;
        break;
      case Op::negation:
        out = ~self(self, g.child());
        break;
      case Op::conj:
        out = self(self, g.left()) & self(self, g.right());
        break;
      case Op::disj:
        out = self(self, g.left()) | self(self, g.right());
        break;
      default:
        break;
    }
    memo.emplace(g.id(), out);
    return out;
  };
  return go(go, f);
}

// ---------------------------------------------------------------------------
// Evaluation

Subspace eval(const Formula& f, const Assignment& a) {
  // Checked up front: short-circuiting below may skip a subtree.
  for (const auto& name : variables(f)) a.at(name);
  std::unordered_map<const void*, Subspace> memo;
  const std::size_t n = a.ambient_dim();
  auto go = [&](auto& self, const Formula& g) -> Subspace {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    Subspace out = [&] {
      switch (g.op()) {
        case Op::var: return a.at(g.name());
        case Op::zero: return Subspace::zero(n);
        case Op::one: return Subspace::full(n);
        case Op::negation: return ortho(self(self, g.child()));
        case Op::conj: {
          Subspace l = self(self, g.left());
          if (l.is_zero()) return l;
          return meet(l, self(self, g.right()));
        }
        case Op::disj: {
          Subspace l = self(self, g.left());
          if (l.is_full()) return l;
          return join(l, self(self, g.right()));
        }
      }
      throw InvariantViolation("unknown formula node");
    }();
    memo.emplace(g.id(), out);
    return out;
  };
  return go(go, f);
}

EquationValue eval(const Equation& eq, const Assignment& a) {
  Subspace lhs = eval(eq.lhs, a);
  Subspace rhs = eval(eq.rhs, a);
  bool holds = eq.relation == Relation::equal ? lhs == rhs : meet(lhs, rhs) == lhs;
  return {std::move(lhs), std::move(rhs), holds};
}

}  // namespace qlat
