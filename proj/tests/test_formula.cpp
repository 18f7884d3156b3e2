#include <doctest.h>

#include <string>
#include <vector>

#include "qlat/error.hpp"
#include "qlat/formula.hpp"
#include "support.hpp"

using namespace qlat;
using qlat::testing::gi;

namespace {

const Formula p = Formula::var("p");
const Formula q = Formula::var("q");
const Formula r = Formula::var("r");

Subspace line2(long a, long b) {
  std::vector<std::vector<GaussianRational>> vs{{gi(a), gi(b)}};
  return span(vs, 2);
}

// Evaluation inside the interval [0, B], whose complement is x -> ~x & B.
// Written directly against the lattice operations, not via restrict().
Subspace relative_eval(const Formula& f, const Assignment& a, const Subspace& b) {
  switch (f.op()) {
    case Op::var:
      return meet(a.at(f.name()), b);
    case Op::zero:
      return Subspace::zero(b.ambient_dim());
    case Op::one:
      return b;
    case Op::negation:
      return meet(ortho(relative_eval(f.child(), a, b)), b);
    case Op::conj:
      return meet(relative_eval(f.left(), a, b), relative_eval(f.right(), a, b));
    case Op::disj:
      return join(relative_eval(f.left(), a, b), relative_eval(f.right(), a, b));
  }
  return b;
}

bool negations_on_variables_only(const Formula& f) {
  switch (f.op()) {
    case Op::negation:
      return f.child().op() == Op::var;
    case Op::conj:
    case Op::disj:
      return negations_on_variables_only(f.left()) && negations_on_variables_only(f.right());
    default:
      return true;
  }
}

}  // namespace

TEST_CASE("parsing respects precedence") {
  CHECK(parse_formula("p | q & r") == (p | (q & r)));
  CHECK(parse_formula("p & q | r") == ((p & q) | r));
  CHECK(parse_formula("~p & q") == (~p & q));
  CHECK(parse_formula("~(p & q)") == ~(p & q));
  CHECK(parse_formula("p | q | r") == ((p | q) | r));
  CHECK(parse_formula("  ~ ~p  ") == ~~p);
  CHECK(parse_formula("0 | 1") == (Formula::zero() | Formula::one()));
  CHECK(parse_formula("x_1 & y2") == (Formula::var("x_1") & Formula::var("y2")));
}

TEST_CASE("unicode connectives are accepted") {
  CHECK(parse_formula("p ∧ q ∨ ¬r") == ((p & q) | ~r));
}

TEST_CASE("equations") {
  const Equation e = parse_equation("x & y <= x");
  CHECK(e.relation == Relation::leq);
  CHECK(e.lhs == (Formula::var("x") & Formula::var("y")));
  CHECK(to_string(e) == "x & y <= x");
  CHECK(parse_equation("x | ~x = 1").relation == Relation::equal);
  CHECK(std::holds_alternative<Formula>(parse("p | q")));
  CHECK(std::holds_alternative<Equation>(parse("p = q")));
  CHECK_THROWS_AS(parse_equation("p | q"), ParseError);
  CHECK_THROWS_AS(parse_formula("p = q"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const std::string& text) -> long {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("   ") == 0);
  CHECK(position_of("(p & q") >= 0);
  CHECK(position_of("p & q)") == 5);
  CHECK(position_of("p & & q") == 4);
  CHECK(position_of("p $ q") == 2);
  CHECK(position_of("p q") == 2);
  CHECK(position_of("p &") >= 0);
  CHECK(position_of("2") == 0);
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(to_string((p | q) & r) == "(p | q) & r");
  CHECK(to_string(p | (q & r)) == "p | q & r");
  CHECK(to_string((p | q) | r) == "p | q | r");
  CHECK(to_string(p | (q | r)) == "p | (q | r)");
  CHECK(to_string(~(p & q)) == "~(p & q)");
  CHECK(to_string(~~p) == "~~p");
  CHECK(to_string(~Formula::one()) == "~1");
}

TEST_CASE("parse of print is the identity on random formulas") {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars{"p", "q", "r", "s1"};
  for (int trial = 0; trial < 1000; ++trial) {
    const Formula f = qlat::testing::random_formula(rng, vars, 8);
    const std::string text = to_string(f);
    REQUIRE_MESSAGE(parse_formula(text) == f, text);
    CHECK(to_string(parse_formula(text)) == text);
  }
}

TEST_CASE("variables and tree size") {
  const Formula f = (p & q) | ~(p & r);
  CHECK(variables(f) == std::set<std::string>{"p", "q", "r"});
  CHECK(tree_size(f) == 8);
  CHECK(variables(parse_equation("x = 1")) == std::set<std::string>{"x"});
}

TEST_CASE("negation normal form") {
  CHECK(to_nnf(~(p & q)) == (~p | ~q));
  CHECK(to_nnf(~(p | ~q)) == (~p & q));
  CHECK(to_nnf(~~p) == p);
  CHECK(to_nnf(~Formula::zero()) == Formula::one());
  CHECK(to_nnf(~Formula::one()) == Formula::zero());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Formula f = qlat::testing::random_formula(rng, {"p", "q", "r"}, 6);
    const Formula g = to_nnf(f);
    CHECK(negations_on_variables_only(g));
    // Same value on a random assignment: the lattice is an ortholattice.
    Assignment a(3);
    for (const auto& v : {"p", "q", "r"}) a.bind(v, qlat::testing::random_any(rng, 3));
    CHECK(eval(f, a) == eval(g, a));
  }
}

TEST_CASE("evaluation examples") {
  Assignment a(2);
  a.bind("x", line2(1, 0));
  a.bind("y", line2(0, 1));
  a.bind("z", line2(1, 1));
  const Formula x = Formula::var("x"), y = Formula::var("y"), z = Formula::var("z");
  CHECK(eval(x & (y | z), a) == line2(1, 0));
  CHECK(eval((x & y) | (x & z), a).is_zero());
  CHECK(eval(~x, a) == line2(0, 1));
  CHECK(eval(Formula::one(), a).is_full());

  const EquationValue dist = eval(parse_equation("x & (y | z) <= x & y | x & z"), a);
  CHECK_FALSE(dist.holds);
  CHECK(dist.lhs.dim() == 1);
  CHECK(dist.rhs.dim() == 0);
  CHECK(eval(parse_equation("x & y <= x"), a).holds);
  CHECK(eval(parse_equation("x | ~x = 1"), a).holds);
}

TEST_CASE("evaluation errors") {
  Assignment a(2);
  a.bind("x", Subspace::full(2));
  CHECK_THROWS_AS(a.bind("y", Subspace::full(3)), DimensionError);
  try {
    // The unbound variable sits behind a short-circuit; it is still reported.
    eval(Formula::zero() & Formula::var("ghost"), a);
    FAIL("expected UnboundVariable");
  } catch (const UnboundVariable& e) {
    CHECK(e.name() == "ghost");
  }
}

TEST_CASE("restriction examples") {
  CHECK(restrict(p, r) == (p & r));
  CHECK(restrict(~p, r) == (~(p & r) & r));
  CHECK(restrict(Formula::one(), r) == r);
  CHECK(restrict(Formula::zero(), r) == Formula::zero());
  CHECK(restrict(~(p & q), r) == ((~(p & r) & r) | (~(q & r) & r)));
}

TEST_CASE("restriction evaluates inside beta") {
  std::mt19937_64 rng(41);
  const std::vector<std::string> vars{"p", "q", "r"};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = uniform_index(rng, 1, 4);
    Assignment a(n);
    for (const auto& v : vars) a.bind(v, qlat::testing::random_any(rng, n));
    a.bind("b", qlat::testing::random_any(rng, n));
    const Formula f = qlat::testing::random_formula(rng, vars, 5);
    const Formula beta = qlat::testing::random_formula(rng, {"p", "q", "b"}, 2);
    const Subspace bv = eval(beta, a);
    const Subspace fv = eval(restrict(f, beta), a);
    CHECK(leq(fv, bv));
    CHECK(fv == relative_eval(f, a, bv));
  }
}

TEST_CASE("substitution") {
  const Formula f = p & ~q;
  CHECK(substitute(f, {{"q", r | p}}) == (p & ~(r | p)));
  CHECK(substitute(f, {}) == f);
}
