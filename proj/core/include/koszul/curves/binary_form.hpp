#pragma once

#include <span>

#include "koszul/linalg/matrix.hpp"

namespace koszul::curves {

using linalg::Rat;
using linalg::RatVector;

/// Point (a:b) of P^1 in canonical form: b = 1, or (1:0) for the point at
/// infinity. Values of binary forms are taken at this representative.
struct ProjPoint {
  Rat a;
  Rat b;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Canonicalizes (a:b). Throws ModelError when a = b = 0.
ProjPoint make_point(Rat a, Rat b);
ProjPoint affine_point(Rat a);
ProjPoint point_at_infinity();

/// A binary form of degree d is stored as d + 1 coefficients, coefficient j
/// multiplying s^(d-j) t^j.
Rat evaluate_form(std::span<const Rat> coeffs, const ProjPoint& p);
RatVector multiply_forms(std::span<const Rat> a, std::span<const Rat> b);

/// The linear form b*s - a*t vanishing at p.
RatVector vanishing_linear_form(const ProjPoint& p);

/// The value of the linear form vanishing at `zero_of` at the representative
/// of `at`; nonzero iff the points differ.
Rat linear_form_value(const ProjPoint& zero_of, const ProjPoint& at);

/// True when the binary forms have a common zero on P^1 (or are all zero).
bool have_common_zero(const std::vector<RatVector>& forms);

}  // namespace koszul::curves
