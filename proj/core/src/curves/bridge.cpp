#include "koszul/curves/bridge.hpp"

#include <memory>

#include "koszul/curves/sampling.hpp"
#include "koszul/error.hpp"

namespace koszul::curves {

BridgeAttachment attach_bridge(const LineBundle& a, const PointOnCurve& u, const PointOnCurve& v,
                               std::uint64_t seed) {
  const auto& y = a.curve();
  if (u == v) throw ModelError("bridge attachment needs two distinct points");
  if (!y.is_smooth_point(u) || !y.is_smooth_point(v)) {
    throw ModelError("bridge attachment points must be smooth points of Y");
  }
  const std::size_t z = y.component_count();
  auto nodes = y.nodes();
  nodes.push_back(Node{u, PointOnCurve{z, affine_point(Rat(0))}});
  nodes.push_back(Node{v, PointOnCurve{z, point_at_infinity()}});
  auto x = std::make_shared<const NodalCurve>(z + 1, std::move(nodes), seed);

  Sampler sampler(seed);
  auto degrees = a.degrees();
  degrees.push_back(1);
  auto gluings = a.gluings();
  gluings.push_back(sampler.nonzero_rational());
  gluings.push_back(sampler.nonzero_rational());
  LineBundle l(x, std::move(degrees), std::move(gluings));
  return BridgeAttachment{x, std::move(l), z, u, v};
}

LineBundle extend_over_bridge(const BridgeAttachment& x, const LineBundle& b, long bridge_degree,
                              const Rat& gluing_u, const Rat& gluing_v) {
  if (b.degrees().size() != x.bridge_component ||
      b.gluings().size() + 2 != x.curve->nodes().size()) {
    throw ModelError("bundle does not live on the curve the bridge was attached to");
  }
  auto degrees = b.degrees();
  degrees.push_back(bridge_degree);
  auto gluings = b.gluings();
  gluings.push_back(gluing_u);
  gluings.push_back(gluing_v);
  return LineBundle(x.curve, std::move(degrees), std::move(gluings));
}

}  // namespace koszul::curves
