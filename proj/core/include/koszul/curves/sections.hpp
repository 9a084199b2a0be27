#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "koszul/curves/line_bundle.hpp"

namespace koszul::curves {

/// A subspace of H^0(bundle), stored in reduced row echelon form inside the
/// ambient coefficient space. The coordinates of a member x in this basis are
/// the entries of x at the pivot positions.
class SectionBasis {
 public:
  SectionBasis(LineBundle bundle, std::vector<RatVector> rref_rows, std::vector<std::size_t> pivots);
  /// Row-reduces an arbitrary spanning list.
  static SectionBasis span_of(LineBundle bundle, const std::vector<RatVector>& vectors);

  const LineBundle& bundle() const { return bundle_; }
  std::size_t dimension() const { return sections_.size(); }
  const std::vector<RatVector>& sections() const { return sections_; }
  const RatVector& section(std::size_t k) const { return sections_[k]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates of a member of the span. Throws InvariantViolation when x is
  /// not in the span.
  RatVector coordinates(const RatVector& x) const;
  /// Coordinates without the membership audit.
  RatVector coordinates_unchecked(const RatVector& x) const;
  bool contains(const RatVector& x) const;

  /// Value of basis section k at a smooth point (convention representative).
  Rat evaluate(std::size_t k, const PointOnCurve& p) const;

 private:
  LineBundle bundle_;
  std::vector<RatVector> sections_;
  std::vector<std::size_t> pivots_;
};

/// Global sections: kernel of the node-constraint evaluation map on the
/// ambient coefficient space.
SectionBasis h0_basis(const LineBundle& bundle);

/// The node-constraint matrix (rows = nodes) whose kernel is H^0.
linalg::RatMatrix node_constraint_matrix(const LineBundle& bundle);

/// The component-i binary form of an ambient section vector.
std::span<const Rat> component_form(const LineBundle& bundle, const RatVector& section,
                                    std::size_t component);
Rat evaluate_section(const LineBundle& bundle, const RatVector& section, const PointOnCurve& p);

/// Product of sections of a and b as a section of a (x) b, componentwise.
RatVector multiply(const LineBundle& a, const RatVector& x, const LineBundle& b, const RatVector& y);

/// Sections in `space` vanishing at the given smooth points. Throws
/// ModelError when a point is a node branch or off the curve.
SectionBasis twist_down(const SectionBasis& space, std::span<const PointOnCurve> points);

/// Base point freeness of the linear system: on every component the
/// restricted forms have no common zero.
bool is_globally_generated(const SectionBasis& space);

}  // namespace koszul::curves
