#include "qlat/diagram.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "qlat/error.hpp"

namespace qlat {
namespace {

constexpr std::size_t kMaxStrands = 100;
constexpr std::uint8_t kUnset = 0xff;

// Position of a point on the boundary circle, walking the bottom edge left
// to right and then the top edge right to left.
std::size_t cyclic_position(std::size_t point, std::size_t n) {
  return point < n ? point : 3 * n - 1 - point;
}

std::size_t point_at(std::size_t position, std::size_t n) {
  return position < n ? position : 3 * n - 1 - position;
}

}  // namespace

PlanarDiagram PlanarDiagram::identity(std::size_t n) {
  if (n == 0 || n > kMaxStrands) throw PreconditionError("strand count out of range");
  std::vector<std::uint8_t> p(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = static_cast<std::uint8_t>(n + i);
    p[n + i] = static_cast<std::uint8_t>(i);
  }
  return PlanarDiagram(std::move(p));
}

PlanarDiagram PlanarDiagram::cup_cap(std::size_t n, std::size_t i) {
  if (i < 1 || i + 1 > n) {
    throw PreconditionError("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n > 0 ? n - 1 : 0));
  }
  PlanarDiagram d = identity(n);
  auto& p = d.partner_;
  p[i - 1] = static_cast<std::uint8_t>(i);
  p[i] = static_cast<std::uint8_t>(i - 1);
  p[n + i - 1] = static_cast<std::uint8_t>(n + i);
  p[n + i] = static_cast<std::uint8_t>(n + i - 1);
  return d;
}

PlanarDiagram PlanarDiagram::from_pairs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (n == 0 || n > kMaxStrands) throw PreconditionError("strand count out of range");
  std::vector<std::uint8_t> p(2 * n, kUnset);
  for (auto [a, b] : pairs) {
    if (a >= 2 * n || b >= 2 * n || a == b) {
      throw PreconditionError("invalid pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    if (p[a] != kUnset || p[b] != kUnset) throw PreconditionError("point matched twice");
    p[a] = static_cast<std::uint8_t>(b);
    p[b] = static_cast<std::uint8_t>(a);
  }
  if (std::find(p.begin(), p.end(), kUnset) != p.end()) {
    throw PreconditionError("matching is not perfect");
  }
  // Noncrossing: no two chords interleave on the boundary circle.
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t c = 0; c < 2 * n; ++c) {
      std::size_t pa = cyclic_position(a, n), pb = cyclic_position(p[a], n);
      std::size_t pc = cyclic_position(c, n), pd = cyclic_position(p[c], n);
      if (pa > pb) std::swap(pa, pb);
      if (pc > pd) std::swap(pc, pd);
      if (pa < pc && pc < pb && pb < pd) throw PreconditionError("matching is not planar");
    }
  return PlanarDiagram(std::move(p));
}

std::vector<std::pair<std::size_t, std::size_t>> PlanarDiagram::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < partner_.size(); ++a)
    if (a < partner_[a]) out.emplace_back(a, partner_[a]);
  return out;
}

std::pair<PlanarDiagram, std::size_t> PlanarDiagram::compose(const PlanarDiagram& top,
                                                             const PlanarDiagram& bottom) {
  const std::size_t n = top.strands();
  if (bottom.strands() != n) throw PreconditionError("strand count mismatch in composition");
  // Middle row: top points of `bottom`, identified with bottom points of `top`.
  std::vector<std::uint8_t> result(2 * n, kUnset);
  std::vector<bool> middle_seen(n, false);

  // Follows a strand entering the middle row at column c from the given
  // side until it exits through the outer boundary. Returns the result point.
  auto trace = [&](std::size_t c, bool from_bottom) {
    for (;;) {
      middle_seen[c] = true;
      if (from_bottom) {
        std::size_t next = top.partner_[c];  // bottom edge of `top`
        if (next >= n) return next;          // exits at the top
        c = next;
        from_bottom = false;
      } else {
        std::size_t next = bottom.partner_[n + c];  // top edge of `bottom`
        if (next < n) return next;                  // exits at the bottom
        c = next - n;
        from_bottom = true;
      }
    }
  };

  for (std::size_t b = 0; b < n; ++b) {
    if (result[b] != kUnset) continue;
    std::size_t q = bottom.partner_[b];
    std::size_t end = q < n ? q : trace(q - n, true);
    result[b] = static_cast<std::uint8_t>(end);
    result[end] = static_cast<std::uint8_t>(b);
  }
  for (std::size_t t = n; t < 2 * n; ++t) {
    if (result[t] != kUnset) continue;
    std::size_t q = top.partner_[t];
    std::size_t end = q >= n ? q : trace(q, false);
    result[t] = static_cast<std::uint8_t>(end);
    result[end] = static_cast<std::uint8_t>(t);
  }

  std::size_t loops = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (middle_seen[c]) continue;
    ++loops;
    std::size_t cur = c;
    do {
      middle_seen[cur] = true;
      std::size_t up = top.partner_[cur];
      middle_seen[up] = true;
      cur = bottom.partner_[n + up] - n;
    } while (cur != c);
  }
  return {PlanarDiagram(std::move(result)), loops};
}

std::size_t PlanarDiagram::closure_loops() const {
  const std::size_t n = strands();
  std::vector<bool> seen(2 * n, false);
  std::size_t loops = 0;
  for (std::size_t start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++loops;
    std::size_t cur = start;
    do {
      seen[cur] = true;
      std::size_t other = partner_[cur];
      seen[other] = true;
      cur = other < n ? other + n : other - n;  // closure arc
    } while (!seen[cur]);
  }
  return loops;
}

PlanarDiagram PlanarDiagram::include() const {
  const std::size_t n = strands();
  std::vector<std::uint8_t> p(2 * n + 2);
  auto shift = [n](std::size_t point) { return point < n ? point : point + 1; };
  for (std::size_t a = 0; a < 2 * n; ++a) p[shift(a)] = static_cast<std::uint8_t>(shift(partner_[a]));
  p[n] = static_cast<std::uint8_t>(2 * n + 1);
  p[2 * n + 1] = static_cast<std::uint8_t>(n);
  return PlanarDiagram(std::move(p));
}

PlanarDiagram PlanarDiagram::flip() const {
  const std::size_t n = strands();
  auto swap_side = [n](std::size_t point) { return point < n ? point + n : point - n; };
  std::vector<std::uint8_t> p(2 * n);
  for (std::size_t a = 0; a < 2 * n; ++a)
    p[swap_side(a)] = static_cast<std::uint8_t>(swap_side(partner_[a]));
  return PlanarDiagram(std::move(p));
}

std::vector<PlanarDiagram> enumerate_diagrams(std::size_t n) {
  if (n == 0 || n > 12) throw PreconditionError("enumerate_diagrams supports 1..12 strands");
  // Noncrossing matchings of the boundary circle built by matching the
  // first free position with a partner that leaves an even gap inside.
  std::vector<PlanarDiagram> out;
  std::vector<std::uint8_t> p(2 * n, kUnset);
  std::function<void(std::size_t)> place = [&](std::size_t lo) {
    while (lo < 2 * n && p[point_at(lo, n)] != kUnset) ++lo;
    if (lo == 2 * n) {
      out.push_back(PlanarDiagram(p));
      return;
    }
    // Everything strictly between lo and hi must be matched internally, so
    // the partner sits an odd distance away before the next matched point.
    for (std::size_t hi = lo + 1; hi < 2 * n; hi += 2) {
      std::size_t a = point_at(lo, n), b = point_at(hi, n);
      if (p[b] != kUnset) break;
      p[a] = static_cast<std::uint8_t>(b);
      p[b] = static_cast<std::uint8_t>(a);
      place(lo + 1);
      p[a] = p[b] = kUnset;
    }
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace qlat
