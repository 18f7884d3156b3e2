#pragma once

// Shared helpers for the unit and acceptance suites.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qlat/formula.hpp"
#include "qlat/matrix.hpp"
#include "qlat/subspace.hpp"

namespace qlat::testing {

inline GaussianRational gi(long re, long im = 0) { return {Rational(re), Rational(im)}; }

/// Random matrix with small Gaussian-integer entries; zero entries are
/// frequent so rank deficiency actually occurs.
inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      long re = static_cast<long>(uniform_index(rng, 0, 4)) - 2;
      long im = static_cast<long>(uniform_index(rng, 0, 4)) - 2;
      if (uniform_index(rng, 0, 2) == 0) re = im = 0;
      m(r, c) = gi(re, im);
    }
  return m;
}

/// Subspace with a uniformly drawn dimension in [0, n].
inline Subspace random_any(std::mt19937_64& rng, std::size_t n) {
  return random_subspace(rng, n, uniform_index(rng, 0, n), 3);
}

/// Random formula over `vars` with the given maximum depth.
inline Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars,
                              int depth) {
  const std::size_t pick = uniform_index(rng, 0, depth <= 0 ? 2 : 6);
  switch (pick) {
    case 0:
    case 1: {
      if (uniform_index(rng, 0, 9) == 0) {
        return uniform_index(rng, 0, 1) ? Formula::one() : Formula::zero();
      }
      return Formula::var(vars[uniform_index(rng, 0, vars.size() - 1)]);
    }
    case 2:
      if (depth <= 0) return Formula::var(vars[uniform_index(rng, 0, vars.size() - 1)]);
      return ~random_formula(rng, vars, depth - 1);
    case 3:
    case 4:
      return random_formula(rng, vars, depth - 1) & random_formula(rng, vars, depth - 1);
    default:
      return random_formula(rng, vars, depth - 1) | random_formula(rng, vars, depth - 1);
  }
}

// ---------------------------------------------------------------------------
// Floating point oracle. Subspaces are orthonormal column bases computed
// with SVD; it shares no code with the exact RREF route.

namespace oracle {

using CMat = Eigen::MatrixXcd;
constexpr double kTol = 1e-9;

inline CMat to_complex(const Matrix& m) {
  CMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          std::complex<double>(m(r, c).re().get_d(), m(r, c).im().get_d());
    }
  return out;
}

/// Orthonormal basis (as columns) of the column space of `a`.
inline CMat column_space(const CMat& a, std::size_t n) {
  if (a.cols() == 0) return CMat(static_cast<Eigen::Index>(n), 0);
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullU);
  Eigen::Index rank = 0;
  const auto& s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > kTol * std::max(1.0, s(0))) ++rank;
  return svd.matrixU().leftCols(rank);
}

/// Orthonormal basis of {v : a v = 0}.
inline CMat null_space(const CMat& a, std::size_t n) {
  if (a.rows() == 0) return CMat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullV);
  Eigen::Index rank = 0;
  const auto& s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > kTol * std::max(1.0, s(0))) ++rank;
  return svd.matrixV().rightCols(static_cast<Eigen::Index>(n) - rank);
}

struct Space {
  std::size_t n;
  CMat basis;  // orthonormal columns
  std::size_t dim() const { return static_cast<std::size_t>(basis.cols()); }
  CMat projector() const { return basis * basis.adjoint(); }
};

inline Space from_exact(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  return {n, column_space(to_complex(s.basis()).transpose(), n)};
}

inline Space join(const Space& a, const Space& b) {
  CMat both(static_cast<Eigen::Index>(a.n), a.basis.cols() + b.basis.cols());
  both << a.basis, b.basis;
  return {a.n, column_space(both, a.n)};
}

inline Space ortho(const Space& a) {
  return {a.n, null_space(a.basis.adjoint(), a.n)};
}

inline Space meet(const Space& a, const Space& b) {
  const auto id = CMat::Identity(static_cast<Eigen::Index>(a.n), static_cast<Eigen::Index>(a.n));
  CMat stacked(2 * static_cast<Eigen::Index>(a.n), static_cast<Eigen::Index>(a.n));
  stacked << id - a.projector(), id - b.projector();
  return {a.n, null_space(stacked, a.n)};
}

inline bool same(const Space& a, const Space& b) {
  return a.dim() == b.dim() && (a.projector() - b.projector()).norm() < 1e-7;
}

}  // namespace oracle
}  // namespace qlat::testing
