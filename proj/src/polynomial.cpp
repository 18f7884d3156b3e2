#include "qlat/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "qlat/error.hpp"

namespace qlat {

Polynomial::Polynomial(Rational c) {
  if (sgn(c) != 0) coeffs_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& k : coeffs_) k *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& k : p.coeffs_) k = -k;
  return p;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  Polynomial rem = a;
  if (rem.degree() < b.degree()) return {Polynomial(), rem};
  std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - b.degree()) + 1);
  const Rational lead_inv = 1 / b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
    Rational factor = rem.leading() * lead_inv;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) rem.coeffs_[shift + i] -= factor * b.coeffs_[i];
    quot[shift] = std::move(factor);
    rem.trim();
  }
  return {Polynomial(std::move(quot)), std::move(rem)};
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading() == 1) return *this;
  Polynomial p = *this;
  p *= Rational(1) / leading();
  return p;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

ChebyshevPoly chebyshev(std::size_t n) {
  Polynomial prev = 1;
  if (n == 0) return {0, prev};
  Polynomial cur = Polynomial::x();
  for (std::size_t k = 1; k < n; ++k) {
    Polynomial next = Polynomial::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::d() { return RationalFunction(Polynomial::x()); }

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial::divmod(num_, g).first;
      den_ = Polynomial::divmod(den_, g).first;
    }
  }
  if (den_.leading() != 1) {
    Rational scale = Rational(1) / den_.leading();
    num_ *= scale;
    den_ *= scale;
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.degree() > 0) normalize();
    if (num_.is_zero()) den_ = 1;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw PreconditionError("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::pow(long e) const {
  RationalFunction base = e < 0 ? RationalFunction(1) / *this : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  RationalFunction out = 1;
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

double RationalFunction::evaluate(double x, double pole_tol) const {
  const double den = den_.evaluate(x);
  if (std::fabs(den) < pole_tol) {
    std::ostringstream os;
    os << "pole of " << to_string() << " at d = " << x;
    throw PoleError(os.str());
  }
  return num_.evaluate(x) / den;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qlat
