#include "qlat/temperley_lieb.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qlat/error.hpp"

namespace qlat {

TLElement::TLElement(const PlanarDiagram& d, RationalFunction coeff) : n_(d.strands()) {
  add_term(d, coeff);
}

TLElement TLElement::identity(std::size_t n) { return TLElement(PlanarDiagram::identity(n), 1); }

RationalFunction TLElement::coeff(const PlanarDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void TLElement::add_term(const PlanarDiagram& d, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TLElement& TLElement::operator+=(const TLElement& o) {
  if (o.n_ != n_) throw PreconditionError("strand count mismatch");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  if (o.n_ != n_) throw PreconditionError("strand count mismatch");
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

TLElement& TLElement::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, k] : terms_) k *= c;
  return *this;
}

TLElement operator*(const TLElement& x, const TLElement& y) {
  if (x.n_ != y.n_) {
    throw PreconditionError("strand count mismatch: " + std::to_string(x.n_) + " vs " +
                            std::to_string(y.n_));
  }
  std::vector<RationalFunction> d_powers{RationalFunction(1)};
  TLElement out(x.n_);
  for (const auto& [dx, cx] : x.terms_)
    for (const auto& [dy, cy] : y.terms_) {
      auto [diagram, loops] = PlanarDiagram::compose(dx, dy);
      while (d_powers.size() <= loops) d_powers.push_back(d_powers.back() * RationalFunction::d());
      RationalFunction c = cx * cy;
      if (loops > 0) c *= d_powers[loops];
      out.add_term(diagram, c);
    }
  return out;
}

TLElement tl_mul(const TLElement& x, const TLElement& y) { return x * y; }

TLElement TLElement::include() const {
  TLElement out(n_ + 1);
  for (const auto& [d, c] : terms_) out.terms_.emplace(d.include(), c);
  return out;
}

TLElement raw_generator(std::size_t n, std::size_t i) {
  return TLElement(PlanarDiagram::cup_cap(n, i), 1);
}

TLElement generator_e(std::size_t n, std::size_t i) {
  return TLElement(PlanarDiagram::cup_cap(n, i), RationalFunction(1) / RationalFunction::d());
}

namespace {

void verify_projector(const TLElement& p) {
  const std::size_t n = p.strands();
  const std::string label = "jones_wenzl(" + std::to_string(n) + ")";
  if (p.is_zero()) throw InvariantViolation(label + " is zero");
  if (p.coeff(PlanarDiagram::identity(n)) != RationalFunction(1)) {
    throw InvariantViolation(label + " identity coefficient is not 1");
  }
  if (p * p != p) throw InvariantViolation(label + " is not idempotent");
  for (std::size_t i = 1; i < n; ++i) {
    const TLElement e = generator_e(n, i);
    if (!(e * p).is_zero() || !(p * e).is_zero()) {
      throw InvariantViolation(label + " is not annihilated by e_" + std::to_string(i));
    }
  }
}

}  // namespace

TLElement jones_wenzl(std::size_t n) {
  if (n == 0) throw PreconditionError("jones_wenzl requires n >= 1");
  TLElement p = TLElement::identity(1);
  for (std::size_t k = 1; k < n; ++k) {
    // p_{k+1} = p_k - (D_{k-1}(d) / D_k(d)) p_k U_k p_k, inside TL_{k+1}.
    TLElement pk = p.include();
    RationalFunction ratio(chebyshev(k - 1).poly, chebyshev(k).poly);
    TLElement correction = pk * raw_generator(k + 1, k) * pk;
    correction *= ratio;
    p = pk - correction;
  }
  verify_projector(p);
  return p;
}

RationalFunction markov_trace(const TLElement& x) {
  const long n = static_cast<long>(x.strands());
  RationalFunction out;
  for (const auto& [diagram, c] : x.terms()) {
    const long exponent = static_cast<long>(diagram.closure_loops()) - n;
    out += c * RationalFunction::d().pow(exponent);
  }
  return out;
}

RootParams root_params(std::size_t r) {
  if (r < 3) throw PreconditionError("root of unity level r must be >= 3; got " + std::to_string(r));
  const double pi = std::numbers::pi;
  const std::complex<double> a =
      std::complex<double>(0, 1) * std::polar(1.0, 2 * pi / (4.0 * static_cast<double>(r)));
  return {r, 2 * std::cos(pi / static_cast<double>(r)), a};
}

double eval_at_root(const RationalFunction& f, std::size_t r) { return f.evaluate(root_params(r).d); }

NumericTLElement jw_at_root(std::size_t n, std::size_t r) {
  const RootParams params = root_params(r);
  if (n < 1 || n > r - 1) {
    throw PreconditionError("Jones-Wenzl projectors at level r=" + std::to_string(r) +
                            " exist only for 1 <= n <= r-1 = " + std::to_string(r - 1) +
                            "; got n=" + std::to_string(n));
  }
  NumericTLElement out{n, r, {}};
  const TLElement p = jones_wenzl(n);
  for (const auto& [diagram, c] : p.terms()) {
    out.terms.emplace(diagram, c.evaluate(params.d));
  }
  return out;
}

double markov_trace(const NumericTLElement& x) {
  const double d = root_params(x.r).d;
  double out = 0.0;
  for (const auto& [diagram, c] : x.terms) {
    const int exponent = static_cast<int>(diagram.closure_loops()) - static_cast<int>(x.n);
    out += c * std::pow(d, exponent);
  }
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(rational_to_json(c));
  return j;
}

Json rational_function_to_json(const RationalFunction& f) {
  return {{"num", polynomial_to_json(f.num())}, {"den", polynomial_to_json(f.den())}};
}

namespace {

Json pairing_json(const PlanarDiagram& d) {
  Json pairing = Json::array();
  for (auto [a, b] : d.pairs()) pairing.push_back(Json::array({a, b}));
  return pairing;
}

}  // namespace

Json tl_element_to_json(const TLElement& x) {
  Json terms = Json::array();
  for (const auto& [d, c] : x.terms()) {
    terms.push_back({{"pairing", pairing_json(d)}, {"coeff", rational_function_to_json(c)}});
  }
  return {{"n", x.strands()}, {"terms", terms}};
}

Json numeric_tl_element_to_json(const NumericTLElement& x) {
  Json terms = Json::array();
  for (const auto& [d, c] : x.terms) terms.push_back({{"pairing", pairing_json(d)}, {"coeff", c}});
  return {{"n", x.n}, {"r", x.r}, {"terms", terms}};
}

}  // namespace qlat
