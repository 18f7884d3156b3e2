#include <doctest.h>

#include <vector>

#include "qlat/error.hpp"
#include "qlat/json_io.hpp"
#include "qlat/subspace.hpp"
#include "support.hpp"

using namespace qlat;
using qlat::testing::gi;
using qlat::testing::random_any;
namespace oracle = qlat::testing::oracle;

namespace {

Subspace line(std::vector<GaussianRational> v) {
  const std::size_t n = v.size();
  std::vector<std::vector<GaussianRational>> vs{std::move(v)};
  return span(vs, n);
}

Subspace coords(std::size_t n, std::vector<std::size_t> axes) {
  std::vector<std::vector<GaussianRational>> vs;
  for (auto a : axes) {
    std::vector<GaussianRational> e(n);
    e[a] = gi(1);
    vs.push_back(e);
  }
  return span(vs, n);
}

}  // namespace

TEST_CASE("bounds and basic construction") {
  CHECK(Subspace::zero(3).dim() == 0);
  CHECK(Subspace::full(3).dim() == 3);
  CHECK(Subspace::full(3).is_full());
  CHECK_THROWS_AS(Subspace::zero(0), PreconditionError);
  CHECK_THROWS_AS(Subspace::full(0), PreconditionError);
  // Spanning sets are canonicalized: the same line from different vectors.
  CHECK(line({gi(2), gi(0, 2)}) == line({gi(0, 1), gi(-1)}));
  CHECK(normalized_dim(coords(4, {0, 2, 3})) == Rational(3, 4));
}

TEST_CASE("lattice operations on coordinate subspaces of C^3") {
  const Subspace a = coords(3, {0, 1});
  const Subspace b = coords(3, {1, 2});
  CHECK(meet(a, b) == coords(3, {1}));
  CHECK(join(a, b).is_full());
  CHECK(ortho(a) == coords(3, {2}));
  CHECK(leq(coords(3, {1}), a));
  CHECK_FALSE(leq(a, b));
}

TEST_CASE("complex orthocomplement uses the Hermitian product") {
  // <(1, i), (1, -i)> = 1 + conj(i) * (-i) = 1 - 1 = 0.
  const Subspace l = line({gi(1), gi(0, 1)});
  CHECK(ortho(l) == line({gi(1), gi(0, -1)}));
  CHECK(ortho(ortho(l)) == l);
  // The real-transpose complement would be (1, i) itself, which is wrong.
  CHECK(ortho(l) != l);
}

TEST_CASE("three lines in the plane break distributivity") {
  const Subspace x = line({gi(1), gi(0)});
  const Subspace y = line({gi(0), gi(1)});
  const Subspace z = line({gi(1), gi(1)});
  CHECK(meet(x, join(y, z)) == x);
  CHECK(join(meet(x, y), meet(x, z)).is_zero());
}

TEST_CASE("mismatched ambient dimensions are rejected") {
  CHECK_THROWS_AS(meet(Subspace::full(2), Subspace::full(3)), DimensionError);
  CHECK_THROWS_AS(join(Subspace::zero(2), Subspace::zero(3)), DimensionError);
  CHECK_THROWS_AS(leq(Subspace::zero(2), Subspace::zero(3)), DimensionError);
}

TEST_CASE("random_subspace is deterministic and has the requested dimension") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t d = 0; d <= n; ++d) {
      const Subspace s = random_subspace(n, d, 99 + n * 10 + d);
      CHECK(s.dim() == d);
      CHECK(s == random_subspace(n, d, 99 + n * 10 + d));
    }
  CHECK_THROWS_AS(random_subspace(2, 3, 1), PreconditionError);
}

TEST_CASE("ortholattice laws on random subspaces") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = uniform_index(rng, 1, 6);
    const Subspace x = random_any(rng, n);
    const Subspace y = random_any(rng, n);
    const Subspace z = random_any(rng, n);
    const Subspace xy = meet(x, y);
    const Subspace x_or_y = join(x, y);

    CHECK(ortho(ortho(x)) == x);
    CHECK(join(x, ortho(x)).is_full());
    CHECK(meet(x, ortho(x)).is_zero());
    CHECK(ortho(x).dim() == n - x.dim());
    CHECK(ortho(xy) == join(ortho(x), ortho(y)));
    CHECK(ortho(x_or_y) == meet(ortho(x), ortho(y)));
    CHECK(xy == meet(y, x));
    CHECK(x_or_y == join(y, x));
    CHECK(meet(x, x_or_y) == x);  // absorption
    CHECK(join(x, xy) == x);
    CHECK(meet(meet(x, y), z) == meet(x, meet(y, z)));
    CHECK(join(join(x, y), z) == join(x, join(y, z)));

    // Valuation identity.
    CHECK(x.dim() + y.dim() == xy.dim() + x_or_y.dim());
    // Order inversion and the equality lemma.
    if (leq(x, y)) {
      CHECK(leq(ortho(y), ortho(x)));
      CHECK((x.dim() == y.dim()) == (x == y));
    }
    CHECK(leq(xy, x));
    CHECK(leq(x, x_or_y));

    // Orthomodularity via the Sasaki hook.
    CHECK(leq(meet(x, join(ortho(x), meet(x, y))), y));
    // Modularity with z' = x & z below x.
    const Subspace zx = meet(x, z);
    CHECK(meet(x, join(y, zx)) == join(meet(x, y), zx));
  }
}

TEST_CASE("exact operations agree with the floating point oracle") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = uniform_index(rng, 1, 6);
    const Subspace x = random_any(rng, n);
    const Subspace y = random_any(rng, n);
    const auto fx = oracle::from_exact(x);
    const auto fy = oracle::from_exact(y);
    CHECK(fx.dim() == x.dim());
    CHECK(oracle::same(oracle::from_exact(meet(x, y)), oracle::meet(fx, fy)));
    CHECK(oracle::same(oracle::from_exact(join(x, y)), oracle::join(fx, fy)));
    CHECK(oracle::same(oracle::from_exact(ortho(x)), oracle::ortho(fx)));
  }
}

TEST_CASE("tensor embedding is a lattice homomorphism") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform_index(rng, 1, 3);
    const std::size_t k = uniform_index(rng, 1, 2);
    const auto side = uniform_index(rng, 0, 1) ? TensorSide::left : TensorSide::right;
    const Subspace x = random_any(rng, n);
    const Subspace y = random_any(rng, n);
    auto e = [&](const Subspace& s) { return tensor_embed(s, k, side); };
    CHECK(e(x).ambient_dim() == n * k);
    CHECK(e(x).dim() == x.dim() * k);
    CHECK(e(meet(x, y)) == meet(e(x), e(y)));
    CHECK(e(join(x, y)) == join(e(x), e(y)));
    CHECK(e(ortho(x)) == ortho(e(x)));
  }
}

TEST_CASE("tensor embedding sides") {
  const Subspace e0 = coords(2, {0});
  // e0 (x) C^2 = span{e00, e01}; C^2 (x) e0 = span{e00, e10}.
  CHECK(tensor_embed(e0, 2, TensorSide::right) == coords(4, {0, 1}));
  CHECK(tensor_embed(e0, 2, TensorSide::left) == coords(4, {0, 2}));
  CHECK_THROWS_AS(tensor_embed(e0, 0), PreconditionError);
}

TEST_CASE("subspace JSON round-trip and canonicalization") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Subspace s = random_any(rng, uniform_index(rng, 1, 5));
    CHECK(subspace_from_json(subspace_to_json(s)) == s);
  }
  const Json redundant = Json::parse(
      R"({"ambient": 2, "basis": [[["2","1","0","1"],["0","1","0","1"]],
                                  [["4","1","0","1"],["0","1","0","1"]]]})");
  CHECK(subspace_from_json(redundant) == coords(2, {0}));
  CHECK_THROWS_AS(subspace_from_json(Json::parse(R"({"ambient": 2})")), FormatError);
  CHECK_THROWS_AS(
      subspace_from_json(Json::parse(R"({"ambient": 2, "basis": [[["1","1","0","1"]]]})")),
      FormatError);
}
