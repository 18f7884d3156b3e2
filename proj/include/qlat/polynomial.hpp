#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qlat/scalar.hpp"

namespace qlat {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zero coefficients are never stored; the zero polynomial has no
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT: constants
  Polynomial(Rational c);                           // NOLINT: constants
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The monomial x.
  static Polynomial x();
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Euclidean division; throws PreconditionError on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);
  Polynomial monic() const;

  /// Horner evaluation in double precision.
  double evaluate(double x) const;
  Rational evaluate(const Rational& x) const;

  std::string to_string(const std::string& var = "d") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(d): numerator / denominator with gcd 1 and a monic
/// denominator, so equal functions have equal representations.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}              // NOLINT: constants
  RationalFunction(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT: constants
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT: polynomials
  /// Throws PreconditionError when `den` is zero.
  RationalFunction(Polynomial num, Polynomial den);

  /// The indeterminate d.
  static RationalFunction d();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  /// Integer power; negative exponents invert.
  RationalFunction pow(long e) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Double precision value at d = x. Throws PoleError when the
  /// denominator is within `pole_tol` of zero.
  double evaluate(double x, double pole_tol = 1e-12) const;

  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Chebyshev polynomial of the recursion D_0 = 1, D_1 = x,
/// D_{n+1} = x D_n - D_{n-1}.
struct ChebyshevPoly {
  std::size_t index = 0;
  Polynomial poly;
};

ChebyshevPoly chebyshev(std::size_t n);

}  // namespace qlat
