#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "koszul/curves/sections.hpp"

namespace koszul::verify {

using curves::LineBundle;
using curves::PointOnCurve;
using curves::SectionBasis;
using linalg::Rat;
using linalg::RatMatrix;
using linalg::RatVector;

/// The map Y -> P^r given by an ordered list of sections of A. Points of Y in
/// P^r are the images of smooth points.
class ProjectiveMap {
 public:
  /// The complete linear system, in the basis order of h0_basis.
  explicit ProjectiveMap(const SectionBasis& complete);
  /// An explicit list of sections; may be linearly dependent.
  ProjectiveMap(LineBundle bundle, std::vector<RatVector> sections);

  const LineBundle& bundle() const { return bundle_; }
  const std::vector<RatVector>& sections() const { return sections_; }
  std::size_t variables() const { return sections_.size(); }

  /// No linear relation among the coordinates on the image.
  bool nondegenerate() const;
  RatVector image(const PointOnCurve& p) const;

 private:
  LineBundle bundle_;
  std::vector<RatVector> sections_;
};

/// Quadric sum_{i <= j} c_ij x_i x_j in `variables` homogeneous coordinates.
/// Coefficients are stored in lexicographic order of the pairs (i, j).
struct Quadric {
  std::size_t variables = 0;
  RatVector coefficients;

  Rat value(const RatVector& x) const;
  /// B_Q(x, y) = Q(x + y) - Q(x) - Q(y).
  Rat polar(const RatVector& x, const RatVector& y) const;
  /// Symmetric matrix S with Q(x) = x^T S x.
  std::vector<RatVector> symmetric_matrix() const;
};

/// Matrix of Sym^2 <sections> -> sections of A^2 (ambient coefficients of
/// A^2). Columns follow the lexicographic pairs (i <= j).
RatMatrix symmetric_multiplication_matrix(const ProjectiveMap& map);

/// Basis of the quadrics vanishing on the image: ker of the matrix above.
std::vector<Quadric> quadrics_through(const ProjectiveMap& map);

/// True when B_Q(phi(x), phi(y)) vanishes identically for x, y on the curve,
/// decided exactly from the component forms.
bool polar_form_vanishes_on_curve(const Quadric& q, const ProjectiveMap& map);

struct QuadricWitness {
  Quadric quadric;
  std::vector<RatVector> symmetric;  // symmetric coefficient array
  PointOnCurve u;
  PointOnCurve v;
  Rat polar_value;
};

/// First basis quadric with B_Q(u, v) != 0.
std::optional<QuadricWitness> find_secant_witness(const ProjectiveMap& map,
                                                  const std::vector<Quadric>& quadrics,
                                                  const PointOnCurve& u, const PointOnCurve& v);

/// Witness search on the complete linear system of A. Requires k_{1,1} > 0
/// (ModelError otherwise). Cross-checks against the rank condition at the same
/// pair: a witness forces eqnrr_check(A, 1, u, v) and its absence forces the
/// rank condition to fail; a mismatch is an InvariantViolation.
std::optional<QuadricWitness> quadric_secant_witness(const LineBundle& a, const PointOnCurve& u,
                                                     const PointOnCurve& v);

enum class SecantOutcome { Holds, Inconclusive, PreconditionFailed };

struct SecantCheck {
  SecantOutcome outcome = SecantOutcome::PreconditionFailed;
  std::size_t quadrics_tested = 0;
  std::size_t witnessed = 0;
  std::size_t pairs_tried = 0;
};

inline constexpr std::size_t kSecantPairBudget = 64;
inline constexpr std::size_t kSecantRandomCombinations = 8;

/// Every basis quadric (plus kSecantRandomCombinations seeded combinations)
/// must receive a pair u, v with B_Q(u, v) != 0 within kSecantPairBudget
/// sampled pairs. A quadric whose polar form vanishes identically on the curve
/// contradicts non-containment of the secant variety and raises
/// InvariantViolation; an unlucky search is Inconclusive.
SecantCheck secant_noncontainment_check(const ProjectiveMap& map, std::uint64_t seed);

const char* to_string(SecantOutcome outcome);

}  // namespace koszul::verify
