#pragma once

#include <complex>
#include <cstddef>
#include <map>

#include "qlat/diagram.hpp"
#include "qlat/json_io.hpp"
#include "qlat/polynomial.hpp"

namespace qlat {

/// Element of the Temperley-Lieb algebra TL_n over Q(d): a linear
/// combination of n-strand planar diagrams, a closed loop evaluating to d.
/// Zero coefficients are never stored.
class TLElement {
 public:
  explicit TLElement(std::size_t n) : n_(n) {}
  TLElement(const PlanarDiagram& d, RationalFunction coeff);

  static TLElement identity(std::size_t n);

  std::size_t strands() const { return n_; }
  const std::map<PlanarDiagram, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of `d`, zero when absent.
  RationalFunction coeff(const PlanarDiagram& d) const;

  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  TLElement& operator*=(const RationalFunction& c);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(const RationalFunction& c, TLElement a) { return a *= c; }
  /// Diagram composition, `x` stacked above `y`.
  friend TLElement operator*(const TLElement& x, const TLElement& y);

  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TLElement& a, const TLElement& b) { return !(a == b); }

  /// Image under TL_n -> TL_{n+1}, one through-strand added on the right.
  TLElement include() const;

 private:
  void add_term(const PlanarDiagram& d, const RationalFunction& c);

  std::size_t n_;
  std::map<PlanarDiagram, RationalFunction> terms_;
};

TLElement tl_mul(const TLElement& x, const TLElement& y);

/// Raw cup-cap diagram U_i, with U_i^2 = d U_i.
TLElement raw_generator(std::size_t n, std::size_t i);
/// Normalized generator e_i = U_i / d: e_i^2 = e_i and
/// e_i e_{i+-1} e_i = e_i / d^2. Requires 1 <= i <= n-1.
TLElement generator_e(std::size_t n, std::size_t i);

/// Jones-Wenzl projector p_n, built with Wenzl's recursion
/// p_{k+1} = p_k - (D_{k-1}/D_k) p_k U_k p_k and checked against
/// p^2 = p != 0, e_i p = p e_i = 0 and unit identity coefficient before it
/// is returned. Throws InvariantViolation if any check fails.
TLElement jones_wenzl(std::size_t n);

/// Normalized Markov trace: a diagram contributes d^(loops of its closure - n).
RationalFunction markov_trace(const TLElement& x);

struct RootParams {
  std::size_t r;
  /// d = -A^2 - A^-2 = 2 cos(pi / r).
  double d;
  /// Canonical choice A = i e^(2 pi i / 4r).
  std::complex<double> a;
};

/// Throws PreconditionError for r < 3.
RootParams root_params(std::size_t r);

/// f at d = 2 cos(pi / r). Throws PoleError at a pole.
double eval_at_root(const RationalFunction& f, std::size_t r);

/// TL element with floating point coefficients.
struct NumericTLElement {
  std::size_t n = 0;
  std::size_t r = 0;
  std::map<PlanarDiagram, double> terms;
};

/// jones_wenzl(n) specialized at d = 2 cos(pi / r). The projectors only
/// exist for 1 <= n <= r - 1; larger n throws PreconditionError.
NumericTLElement jw_at_root(std::size_t n, std::size_t r);

/// Trace of a numeric element at its own root parameter.
double markov_trace(const NumericTLElement& x);

Json polynomial_to_json(const Polynomial& p);
Json rational_function_to_json(const RationalFunction& f);
Json tl_element_to_json(const TLElement& x);
Json numeric_tl_element_to_json(const NumericTLElement& x);

}  // namespace qlat
