#include "qlat/matrix.hpp"

#include <string>
#include <utility>

#include "qlat/error.hpp"

namespace qlat {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const std::vector<GaussianRational>> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("vector of length " + std::to_string(rows[r].size()) +
                           " in ambient dimension " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(lead, k));
    }
    if (!a(lead, c).is_one()) {
      GaussianRational inv = a(lead, c).inverse();
      for (std::size_t k = c; k < cols; ++k) a(lead, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      GaussianRational factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!a(lead, k).is_zero()) a(r, k) -= factor * a(lead, k);
      }
    }
    out.pivot_cols.push_back(c);
    ++lead;
  }
  out.rank = lead;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix row_basis(const Matrix& m) {
  RrefResult r = rref(m);
  r.reduced.truncate_rows(r.rank);
  if (r.rank == 0) return Matrix(0, m.cols());
  return std::move(r.reduced);
}

Matrix kernel(const Matrix& m) {
  const std::size_t cols = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  Matrix basis(cols - r.rank, cols);
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    for (std::size_t k = 0; k < r.rank; ++k) {
      basis(out, r.pivot_cols[k]) = -r.reduced(k, free);
    }
    ++out;
  }
  return row_basis(basis);
}

Matrix conj_transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c).conj();
  return t;
}

Matrix conjugate(const Matrix& m) {
  Matrix t(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(r, c) = m(r, c).conj();
  return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw DimensionError("vstack column mismatch: " + std::to_string(top.cols()) + " vs " +
                         std::to_string(bottom.cols()));
  }
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < bottom.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

std::vector<GaussianRational> apply(const Matrix& m, std::span<const GaussianRational> v) {
  if (v.size() != m.cols()) throw DimensionError("apply: vector length mismatch");
  std::vector<GaussianRational> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace qlat
