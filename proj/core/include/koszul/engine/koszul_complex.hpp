#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "koszul/curves/sections.hpp"
#include "koszul/linalg/matrix.hpp"

namespace koszul::engine {

using curves::LineBundle;
using curves::SectionBasis;
using linalg::RatMatrix;

/// Matrix of the Koszul-type map
///   Lambda^p V (x) S  ->  Lambda^(p-1) V (x) T,
///   v_1 ^ ... ^ v_p (x) s  |->  sum_i (-1)^i v_1 ^ .. v_i omitted .. ^ v_p (x) v_i s
/// (i counted from 1) in lexicographic wedge bases. Column index is
/// wedge * dim S + s, row index is wedge * dim T + t. Every product v_i s must
/// lie in T; otherwise InvariantViolation (a model bug).
RatMatrix koszul_map(const SectionBasis& v, std::size_t p, const SectionBasis& source,
                     const SectionBasis& target);

struct KoszulCell {
  std::size_t p = 0;
  int q = 0;
  std::size_t k = 0;
  std::size_t rank_in = 0;   // rank of d_{p+1,q-1}
  std::size_t rank_out = 0;  // rank of d_{p,q}
  std::size_t dimension = 0; // dim Lambda^p H^0(L) (x) H^0(B (x) L^q)
};

/// The complexes Lambda^p H^0(L) (x) H^0(B (x) L^q) for a coefficient bundle B
/// (O_X when absent) and q in [-1, max_q + 1]. All section bases are computed
/// at construction; afterwards the object is read-only and may be shared
/// between threads.
class KoszulComplex {
 public:
  explicit KoszulComplex(LineBundle l, std::optional<LineBundle> twist = std::nullopt,
                         int max_q = 3);

  const LineBundle& bundle() const { return sections_.bundle(); }
  const SectionBasis& sections() const { return sections_; }
  /// r = h^0(L) - 1.
  std::size_t r() const { return sections_.dimension() - 1; }
  int max_q() const { return max_q_; }

  /// Basis of H^0(B (x) L^q), q in [-1, max_q + 1].
  const SectionBasis& coefficients(int q) const;
  std::size_t space_dimension(std::size_t p, int q) const;

  /// d_{p,q}. p = 0 gives the map to the zero space.
  RatMatrix differential(std::size_t p, int q) const;
  std::size_t differential_rank(std::size_t p, int q) const;

  /// k_{p,q} = dim - rank(d_{p,q}) - rank(d_{p+1,q-1}); requires q in [0, max_q].
  KoszulCell cell(std::size_t p, int q) const;

 private:
  SectionBasis sections_;
  int max_q_;
  std::vector<SectionBasis> coefficients_;  // index q + 1
};

/// The matrix of d_{p,q} with coefficients in `twist` (or O_X).
RatMatrix koszul_differential(std::size_t p, int q, const LineBundle& l,
                              const std::optional<LineBundle>& twist = std::nullopt);

/// h^0(Lambda^k M_A (x) B), defined as the kernel of
/// Lambda^k H^0(A) (x) B -> Lambda^(k-1) H^0(A) (x) H^0(A (x) B)
/// where `a_sections` spans H^0(A) and `b` is a subspace of some H^0 (for
/// instance the sections of A vanishing at points).
std::size_t kernel_bundle_h0(const SectionBasis& a_sections, std::size_t k, const SectionBasis& b);

/// dim K_{r-p,0}(X, L; omega_X), as dim ker d_0 minus the rank of the
/// incoming map from Lambda^(r-p+1) H^0(L) (x) H^0(omega (x) L^-1).
std::size_t twisted_k00(const LineBundle& l, std::size_t p);

/// Same, with an explicitly supplied dualizing bundle.
std::size_t twisted_k00(const LineBundle& l, const LineBundle& omega, std::size_t p);

}  // namespace koszul::engine
