#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qlat {

/// Noncrossing perfect matching of the 2n boundary points of an n-strand
/// Temperley-Lieb diagram.
///
/// Points 0..n-1 run left to right along the bottom edge and n..2n-1 left
/// to right along the top edge. The matching is stored as a partner table,
/// which is its own canonical form.
class PlanarDiagram {
 public:
  /// n vertical strands.
  static PlanarDiagram identity(std::size_t n);
  /// The raw generator U_i (1 <= i <= n-1): a cap joining bottom points
  /// i-1, i and a cup joining the matching top points; all other strands
  /// vertical.
  static PlanarDiagram cup_cap(std::size_t n, std::size_t i);
  /// Validates that `pairs` is a perfect, noncrossing matching of 2n points.
  static PlanarDiagram from_pairs(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t strands() const { return partner_.size() / 2; }
  std::size_t partner(std::size_t point) const { return partner_[point]; }
  /// Pairs (a, b) with a < b, sorted by a.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  /// Stacks `top` above `bottom`. Returns the composite and the number of
  /// closed loops formed in the middle.
  static std::pair<PlanarDiagram, std::size_t> compose(const PlanarDiagram& top,
                                                       const PlanarDiagram& bottom);

  /// Loops formed by joining top point i to bottom point i for every i.
  std::size_t closure_loops() const;

  /// Adds one vertical strand on the right.
  PlanarDiagram include() const;

  /// Mirror image top <-> bottom.
  PlanarDiagram flip() const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;
  friend auto operator<=>(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  friend std::vector<PlanarDiagram> enumerate_diagrams(std::size_t n);
  explicit PlanarDiagram(std::vector<std::uint8_t> partner) : partner_(std::move(partner)) {}
  std::vector<std::uint8_t> partner_;
};

/// Every n-strand diagram, in a fixed order. Their number is Catalan(n).
std::vector<PlanarDiagram> enumerate_diagrams(std::size_t n);

/// C(2n, n) / (n + 1).
std::uint64_t catalan(std::size_t n);

}  // namespace qlat
