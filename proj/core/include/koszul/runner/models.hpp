#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/curves/line_bundle.hpp"

namespace koszul::runner {

/// Named models with seeded general data:
///   rational-normal(d)    P^1 with O(d)
///   conic, twisted-cubic  rational-normal(2), rational-normal(3)
///   cycle-genus-1(d)      two components meeting twice, degrees summing to d
///   canonical-graph(g)    trivalent graph curve (K4 for g = 3, prism over a
///                         (g-1)-cycle otherwise) carrying its dualizing sheaf
///   double-cover(g,k)     two lines glued at g+1 matching points, pullback of
///                         O(k) under the fold map (hyperelliptic, special)
/// Throws ModelError for unknown names or unsupported parameters.
curves::LineBundle builtin_model(const std::string& name, std::uint64_t seed);

std::vector<std::string> builtin_model_names();

/// A model for the cell (g, r, d) with h^1 = g - d + r in {0, 1} and rho >= 0:
/// the base case (rational normal curve, resp. canonical graph curve) followed
/// by g - g_0 bridge attachments at seeded general points.
curves::LineBundle model_for_cell(long g, long r, long d, std::uint64_t seed);

/// Attaches `steps` bridges at seeded points, resampling a step when the result
/// is not base point free.
curves::LineBundle attach_bridges(const curves::LineBundle& base, long steps, std::uint64_t seed);

}  // namespace koszul::runner
