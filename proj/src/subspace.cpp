#include "qlat/subspace.hpp"

#include <limits>
#include <string>

#include "qlat/error.hpp"

namespace qlat {
namespace {

void require_ambient(std::size_t ambient) {
  if (ambient == 0) throw PreconditionError("ambient dimension must be at least 1");
}

void require_same_ambient(const Subspace& p, const Subspace& q) {
  if (p.ambient_dim() != q.ambient_dim()) {
    throw DimensionError("ambient mismatch: C^" + std::to_string(p.ambient_dim()) + " vs C^" +
                         std::to_string(q.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) {
  require_ambient(ambient);
  return Subspace(ambient, Matrix(0, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  require_ambient(ambient);
  return Subspace(ambient, Matrix::identity(ambient));
}

Subspace Subspace::from_matrix(const Matrix& rows) {
  require_ambient(rows.cols());
  return Subspace(rows.cols(), row_basis(rows));
}

Matrix Subspace::kernel_matrix() const { return conjugate(ortho(*this).basis()); }

Subspace span(std::span<const std::vector<GaussianRational>> vectors, std::size_t ambient) {
  require_ambient(ambient);
  return Subspace::from_matrix(Matrix::from_rows(vectors, ambient));
}

Subspace meet(const Subspace& p, const Subspace& q) {
  require_same_ambient(p, q);
  if (p.is_zero() || q.is_full()) return p;
  if (q.is_zero() || p.is_full()) return q;
  // p = ker M_p and q = ker M_q, so p meet q = ker [M_p; M_q].
  return Subspace::from_matrix(kernel(vstack(p.kernel_matrix(), q.kernel_matrix())));
}

Subspace join(const Subspace& p, const Subspace& q) {
  require_same_ambient(p, q);
  if (p.is_zero() || q.is_full()) return q;
  if (q.is_zero() || p.is_full()) return p;
  return Subspace::from_matrix(vstack(p.basis(), q.basis()));
}

Subspace ortho(const Subspace& p) {
  if (p.is_zero()) return Subspace::full(p.ambient_dim());
  if (p.is_full()) return Subspace::zero(p.ambient_dim());
  // <b, v> = sum conj(b_i) v_i, so the complement is ker(conj(B)).
  return Subspace::from_matrix(kernel(conjugate(p.basis())));
}

bool equals(const Subspace& p, const Subspace& q) {
  require_same_ambient(p, q);
  return p == q;
}

bool leq(const Subspace& p, const Subspace& q) {
  require_same_ambient(p, q);
  if (p.dim() > q.dim()) return false;
  if (p.is_zero() || q.is_full()) return true;
  return rank(vstack(q.basis(), p.basis())) == q.dim();
}

Rational normalized_dim(const Subspace& p) {
  return make_rational(static_cast<unsigned long>(p.dim()),
                       static_cast<unsigned long>(p.ambient_dim()));
}

Subspace tensor_embed(const Subspace& p, std::size_t factor_dim, TensorSide side) {
  if (factor_dim == 0) throw PreconditionError("tensor factor dimension must be at least 1");
  const Matrix id = Matrix::identity(factor_dim);
  const std::size_t ambient = p.ambient_dim() * factor_dim;
  if (p.is_zero()) return Subspace::zero(ambient);
  // Rows of kron(B, I) are b_i (x) e_j; rows of kron(I, B) are e_j (x) b_i.
  Matrix rows = side == TensorSide::right ? kron(p.basis(), id) : kron(id, p.basis());
  return Subspace::from_matrix(rows);
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  if (hi < lo) throw PreconditionError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::size_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::size_t>(x % span);
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient, std::size_t dim,
                         long entry_bound) {
  require_ambient(ambient);
  if (dim > ambient) {
    throw PreconditionError("requested dimension " + std::to_string(dim) + " exceeds ambient " +
                            std::to_string(ambient));
  }
  if (entry_bound < 1) throw PreconditionError("entry bound must be at least 1");
  if (dim == 0) return Subspace::zero(ambient);
  if (dim == ambient) return Subspace::full(ambient);

  const std::size_t width = 2 * static_cast<std::size_t>(entry_bound);
  auto draw = [&] {
    return static_cast<long>(uniform_index(rng, 0, width)) - entry_bound;
  };
  constexpr int kMaxRedraws = 1000;
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Matrix m(dim, ambient);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < ambient; ++c) {
        long re = draw();
        long im = draw();
        m(r, c) = GaussianRational(Rational(re), Rational(im));
      }
    Subspace s = Subspace::from_matrix(m);
    if (s.dim() == dim) return s;
  }
  throw InvariantViolation("random_subspace: " + std::to_string(kMaxRedraws) +
                           " rank-deficient draws in a row");
}

Subspace random_subspace(std::size_t ambient, std::size_t dim, std::uint64_t seed,
                         long entry_bound) {
  std::mt19937_64 rng(seed);
  return random_subspace(rng, ambient, dim, entry_bound);
}

}  // namespace qlat
