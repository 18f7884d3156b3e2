#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qlat/scalar.hpp"

namespace qlat {

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Matrix identity(std::size_t n);
  /// One row per vector. Every vector must have length `cols`.
  static Matrix from_rows(std::span<const std::vector<GaussianRational>> rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<GaussianRational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const GaussianRational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  /// Keeps the first `n` rows.
  void truncate_rows(std::size_t n);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form over Q(i). Pivots are normalized to 1 and zero
/// rows trail, so the result is unique for the row space of `m`.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical RREF basis of {v : m v = 0}, one vector per row.
Matrix kernel(const Matrix& m);

/// Row-space basis in canonical RREF with zero rows dropped.
Matrix row_basis(const Matrix& m);

Matrix conj_transpose(const Matrix& m);
/// Entry-wise complex conjugate.
Matrix conjugate(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
/// Stacks `bottom` under `top`. Column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// m v for a column vector v.
std::vector<GaussianRational> apply(const Matrix& m, std::span<const GaussianRational> v);

}  // namespace qlat
