#pragma once

#include <cstdint>

#include "koszul/curves/line_bundle.hpp"

namespace koszul::curves {

/// X = Y u Z where Z = P^1 meets Y at u (glued to 0 on Z) and v (glued to
/// infinity on Z), together with L on X restricting to A on Y and O(1) on Z.
struct BridgeAttachment {
  CurvePtr curve;
  LineBundle bundle;
  std::size_t bridge_component;
  PointOnCurve u;
  PointOnCurve v;
};

/// Throws ModelError when u = v or either point is a node branch. The two new
/// gluing scalars are drawn from `seed`.
BridgeAttachment attach_bridge(const LineBundle& a, const PointOnCurve& u, const PointOnCurve& v,
                               std::uint64_t seed);

/// The bundle on X that restricts to b on Y and to O_Z(bridge_degree) on the
/// bridge, with the given gluings at the two bridge nodes.
LineBundle extend_over_bridge(const BridgeAttachment& x, const LineBundle& b, long bridge_degree,
                              const Rat& gluing_u, const Rat& gluing_v);

}  // namespace koszul::curves
