#include "koszul/runner/models.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <regex>
#include <span>
#include <utility>

#include "koszul/curves/bridge.hpp"
#include "koszul/curves/dualizing.hpp"
#include "koszul/curves/sampling.hpp"
#include "koszul/curves/sections.hpp"
#include "koszul/error.hpp"

namespace koszul::runner {

using curves::LineBundle;
using curves::NodalCurve;
using curves::Node;
using curves::PointOnCurve;
using curves::Sampler;
using linalg::Rat;

namespace {

struct ParsedName {
  std::string base;
  std::vector<long> args;
};

ParsedName parse_name(const std::string& name) {
  static const std::regex pattern(R"(^([a-z0-9-]+)(?:\((\d+)(?:,\s*(\d+))?\))?$)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw ModelError("malformed model name '" + name + "'");
  ParsedName out{m[1].str(), {}};
  for (int i = 2; i <= 3; ++i) {
    if (m[i].matched) out.args.push_back(std::stol(m[i].str()));
  }
  return out;
}

void expect_args(const ParsedName& n, std::size_t count, const std::string& name) {
  if (n.args.size() != count) {
    throw ModelError("model '" + name + "' expects " + std::to_string(count) + " parameter(s)");
  }
}

void expect_range(long value, long lo, long hi, const std::string& what) {
  if (value < lo || value > hi) {
    throw ModelError(what + " = " + std::to_string(value) + " outside the supported range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

LineBundle rational_normal(long d, std::uint64_t seed) {
  auto curve = std::make_shared<const NodalCurve>(1, std::vector<Node>{}, seed);
  return LineBundle(curve, {d}, {});
}

// Two lines meeting at two points; the degrees are split as evenly as possible.
LineBundle cycle_genus_1(long d, std::uint64_t seed) {
  return curves::with_resampling(
      seed, "cycle-genus-1",
      [&](std::uint64_t s) {
        Sampler sampler(s);
        std::vector<PointOnCurve> used;
        std::vector<Node> nodes;
        for (int k = 0; k < 2; ++k) {
          auto a = sampler.smooth_point(NodalCurve(1, {}, 0), 0, used);
          used.push_back(a);
          PointOnCurve b{1, sampler.point()};
          while (std::find(used.begin(), used.end(), b) != used.end()) b.point = sampler.point();
          used.push_back(b);
          nodes.push_back({a, b});
        }
        auto curve = std::make_shared<const NodalCurve>(2, nodes, seed);
        return LineBundle(curve, {(d + 1) / 2, d / 2},
                          {sampler.nonzero_rational(), sampler.nonzero_rational()});
      },
      [](const LineBundle& l) { return curves::is_globally_generated(curves::h0_basis(l)); });
}

std::vector<std::pair<std::size_t, std::size_t>> graph_edges(long g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (g == 3) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
    return edges;
  }
  const auto m = static_cast<std::size_t>(g - 1);
  for (std::size_t i = 0; i < m; ++i) {
    edges.emplace_back(i, (i + 1) % m);
    edges.emplace_back(m + i, m + (i + 1) % m);
    edges.emplace_back(i, m + i);
  }
  return edges;
}

// Trivalent graph curve: every component is a line through three nodes. Any
// three points of P^1 are projectively equivalent, so the branch points are
// fixed at 0, 1, infinity and the curve carries no moduli.
LineBundle canonical_graph(long g, std::uint64_t seed) {
  const auto edges = graph_edges(g);
  const std::size_t components = static_cast<std::size_t>(2 * g - 2);
  const std::array<curves::ProjPoint, 3> slots = {curves::affine_point(Rat(0)),
                                                   curves::affine_point(Rat(1)),
                                                   curves::point_at_infinity()};
  std::vector<std::size_t> used(components, 0);
  std::vector<Node> nodes;
  for (auto [i, j] : edges) {
    nodes.push_back({{i, slots.at(used[i]++)}, {j, slots.at(used[j]++)}});
  }
  auto curve = std::make_shared<const NodalCurve>(components, nodes, seed);
  return curves::dualizing_bundle(curve);
}

// Two lines glued at g + 1 pairs of points with equal coordinates: the fold map
// to P^1 is a double cover and the bundle is the pullback of O(k).
LineBundle double_cover(long g, long k, std::uint64_t seed) {
  Sampler sampler(seed);
  std::vector<PointOnCurve> used;
  std::vector<Node> nodes;
  for (long j = 0; j <= g; ++j) {
    auto a = sampler.smooth_point(NodalCurve(1, {}, 0), 0, used);
    used.push_back(a);
    nodes.push_back({a, {1, a.point}});
  }
  auto curve = std::make_shared<const NodalCurve>(2, nodes, seed);
  return LineBundle(curve, {k, k}, std::vector<Rat>(nodes.size(), Rat(1)));
}

}  // namespace

std::vector<std::string> builtin_model_names() {
  return {"rational-normal(d)", "conic", "twisted-cubic", "cycle-genus-1(d)", "canonical-graph(g)",
          "double-cover(g,k)"};
}

LineBundle builtin_model(const std::string& name, std::uint64_t seed) {
  const ParsedName n = parse_name(name);
  if (n.base == "conic" || n.base == "twisted-cubic") {
    expect_args(n, 0, name);
    return rational_normal(n.base == "conic" ? 2 : 3, seed);
  }
  if (n.base == "rational-normal") {
    expect_args(n, 1, name);
    expect_range(n.args[0], 1, 12, "d");
    return rational_normal(n.args[0], seed);
  }
  if (n.base == "cycle-genus-1") {
    expect_args(n, 1, name);
    expect_range(n.args[0], 2, 12, "d");
    return cycle_genus_1(n.args[0], seed);
  }
  if (n.base == "canonical-graph") {
    expect_args(n, 1, name);
    expect_range(n.args[0], 3, 8, "g");
    return canonical_graph(n.args[0], seed);
  }
  if (n.base == "double-cover") {
    expect_args(n, 2, name);
    expect_range(n.args[0], 1, 8, "g");
    expect_range(n.args[1], 1, 12, "k");
    return double_cover(n.args[0], n.args[1], seed);
  }
  throw ModelError("unknown model '" + name + "'");
}

LineBundle attach_bridges(const LineBundle& base, long steps, std::uint64_t seed) {
  LineBundle current = base;
  for (long step = 0; step < steps; ++step) {
    current = curves::with_resampling(
        curves::mix_seed(seed, static_cast<std::uint64_t>(step)), "bridge attachment",
        [&](std::uint64_t s) {
          Sampler sampler(s);
          const auto u = sampler.smooth_point(current.curve());
          const auto v = sampler.smooth_point(current.curve(), std::span(&u, 1));
          return curves::attach_bridge(current, u, v, s).bundle;
        },
        [](const LineBundle& l) { return curves::is_globally_generated(curves::h0_basis(l)); });
  }
  return current;
}

LineBundle model_for_cell(long g, long r, long d, std::uint64_t seed) {
  const long h1 = g - d + r;
  if (r < 1 || g < 0) throw ModelError("cell needs r >= 1 and g >= 0");
  const long rho = g - (r + 1) * h1;
  if (rho < 0) {
    throw ModelError("cell (" + std::to_string(g) + "," + std::to_string(r) + "," +
                     std::to_string(d) + ") has rho = " + std::to_string(rho) + " < 0");
  }
  if (h1 == 0) return attach_bridges(rational_normal(r, seed), g, seed);
  if (h1 == 1) {
    if (r + 1 < 3) throw ModelError("no built-in canonical base for r = " + std::to_string(r));
    return attach_bridges(canonical_graph(r + 1, seed), g - (r + 1), seed);
  }
  throw ModelError("no built-in model for h^1 = " + std::to_string(h1));
}

}  // namespace koszul::runner
