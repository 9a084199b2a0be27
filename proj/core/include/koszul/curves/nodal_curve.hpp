#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "koszul/curves/binary_form.hpp"

namespace koszul::curves {

/// A marked point on one component. Used both for node branches and for
/// smooth points of the curve.
struct PointOnCurve {
  std::size_t component = 0;
  ProjPoint point;

  friend bool operator==(const PointOnCurve&, const PointOnCurve&) = default;
};

/// A node identifies branch `a` with branch `b`; the two branches lie on
/// different components.
struct Node {
  PointOnCurve a;
  PointOnCurve b;
};

/// Connected curve whose components are copies of P^1 with coordinates (s:t)
/// glued at ordinary nodes. No self-nodes.
class NodalCurve {
 public:
  /// Validates the invariants and throws ModelError on violation: branches on
  /// distinct components, no branch point shared by two nodes, connected
  /// dual graph.
  NodalCurve(std::size_t components, std::vector<Node> nodes, std::uint64_t seed);

  std::size_t component_count() const { return components_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::uint64_t seed() const { return seed_; }

  /// #nodes - #components + 1.
  long arithmetic_genus() const;

  /// Node branch points lying on a component, in node order.
  std::vector<ProjPoint> branch_points(std::size_t component) const;
  std::size_t branch_count(std::size_t component) const;

  bool is_smooth_point(const PointOnCurve& p) const;

 private:
  std::size_t components_;
  std::vector<Node> nodes_;
  std::uint64_t seed_;
};

}  // namespace koszul::curves
