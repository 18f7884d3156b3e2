#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qlat/matrix.hpp"
#include "qlat/scalar.hpp"

namespace qlat {

/// A subspace of C^n with exact Q(i) coordinates.
///
/// The basis is kept in canonical reduced row echelon form, so two
/// Subspace values denote the same subspace exactly when they compare
/// equal. Ambient dimension zero is rejected.
class Subspace {
 public:
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Row space of `rows`; `rows.cols()` is the ambient dimension.
  static Subspace from_matrix(const Matrix& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Matrix whose kernel is this subspace: conjugated rows spanning the
  /// orthogonal complement.
  Matrix kernel_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 1;
  Matrix basis_;
};

Subspace span(std::span<const std::vector<GaussianRational>> vectors, std::size_t ambient);

Subspace meet(const Subspace& p, const Subspace& q);
Subspace join(const Subspace& p, const Subspace& q);
Subspace ortho(const Subspace& p);

bool equals(const Subspace& p, const Subspace& q);
/// p is contained in q.
bool leq(const Subspace& p, const Subspace& q);

/// dim(p) / ambient_dim(p).
Rational normalized_dim(const Subspace& p);

enum class TensorSide { left, right };

/// Image of p under C^n -> C^n (x) C^k (side right, p (x) C^k) or
/// C^k (x) C^n (side left, C^k (x) p).
Subspace tensor_embed(const Subspace& p, std::size_t factor_dim, TensorSide side = TensorSide::right);

/// Random subspace of exactly `dim` dimensions with Gaussian-integer
/// spanning vectors whose parts are bounded by `entry_bound`. Rank
/// deficient draws are redrawn, at most 1000 times.
Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient, std::size_t dim,
                         long entry_bound = 3);
Subspace random_subspace(std::size_t ambient, std::size_t dim, std::uint64_t seed,
                         long entry_bound = 3);

/// Uniform integer in [lo, hi] from the raw generator stream. Unlike
/// std::uniform_int_distribution the result is identical on every platform.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi);

}  // namespace qlat
