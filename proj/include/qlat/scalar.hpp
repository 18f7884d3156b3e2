#pragma once

#include <gmpxx.h>

#include <string>

namespace qlat {

/// Always-reduced arbitrary precision rational.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws PreconditionError on den == 0.
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: implicit from integers
  GaussianRational(Rational re, Rational im = 0)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always a non-negative rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Human readable form such as "1/2-3i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace qlat
