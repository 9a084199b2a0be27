#include "koszul/curves/nodal_curve.hpp"

#include <numeric>
#include <string>

#include "koszul/error.hpp"

namespace koszul::curves {

NodalCurve::NodalCurve(std::size_t components, std::vector<Node> nodes, std::uint64_t seed)
    : components_(components), nodes_(std::move(nodes)), seed_(seed) {
  if (components_ == 0) throw ModelError("a curve needs at least one component");
  std::vector<std::size_t> parent(components_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<PointOnCurve> seen;
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    const auto& node = nodes_[n];
    for (const auto* branch : {&node.a, &node.b}) {
      if (branch->component >= components_) {
        throw ModelError("node " + std::to_string(n) + " refers to a missing component");
      }
      for (const auto& s : seen) {
        if (s == *branch) {
          throw ModelError("node " + std::to_string(n) + " reuses a branch point");
        }
      }
      seen.push_back(*branch);
    }
    if (node.a.component == node.b.component) {
      throw ModelError("node " + std::to_string(n) + " is a self-node");
    }
    parent[find(node.a.component)] = find(node.b.component);
  }
  for (std::size_t c = 1; c < components_; ++c) {
    if (find(c) != find(0)) throw ModelError("dual graph is disconnected");
  }
}

long NodalCurve::arithmetic_genus() const {
  return static_cast<long>(nodes_.size()) - static_cast<long>(components_) + 1;
}

std::vector<ProjPoint> NodalCurve::branch_points(std::size_t component) const {
  std::vector<ProjPoint> out;
  for (const auto& node : nodes_) {
    if (node.a.component == component) out.push_back(node.a.point);
    if (node.b.component == component) out.push_back(node.b.point);
  }
  return out;
}

std::size_t NodalCurve::branch_count(std::size_t component) const {
  std::size_t k = 0;
  for (const auto& node : nodes_) {
    k += node.a.component == component;
    k += node.b.component == component;
  }
  return k;
}

bool NodalCurve::is_smooth_point(const PointOnCurve& p) const {
  if (p.component >= components_) return false;
  for (const auto& node : nodes_) {
    if (node.a == p || node.b == p) return false;
  }
  return true;
}

}  // namespace koszul::curves
