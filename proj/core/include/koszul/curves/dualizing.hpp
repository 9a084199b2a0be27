#pragma once

#include <cstddef>
#include <span>

#include "koszul/curves/sections.hpp"

namespace koszul::curves {

/// The dualizing sheaf as a line bundle: degree k_i - 2 on component i (k_i
/// node branches on it). A section is the tuple of numerators F_i of the
/// differentials F_i(s,t) (t ds - s dt) / prod_R l_R(s,t), the product over
/// the branch points R of component i. Residues at branch P are
/// F_i(P) / prod_{R != P} l_R(P); the gluing at a node is the ratio that makes
/// the two residues cancel.
LineBundle dualizing_bundle(const CurvePtr& curve);

/// h^0(omega (x) twist) computed directly from residue-matched meromorphic
/// differentials: unknowns are the numerators on each component, one linear
/// condition Res_a + gluing * Res_b = 0 per node, residues obtained from
/// Laurent expansions in the local chart at each branch. Independent of
/// dualizing_bundle.
std::size_t h0_residue_oracle(const LineBundle& twist);

/// O(p_1 + ... + p_k) for smooth points p_j, with canonical section equal to
/// the product of the linear forms vanishing at the points.
LineBundle point_divisor_bundle(const CurvePtr& curve, std::span<const PointOnCurve> points);

}  // namespace koszul::curves
