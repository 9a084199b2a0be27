#include "koszul/verify/propositions.hpp"

#include <stdexcept>

#include "koszul/curves/dualizing.hpp"
#include "koszul/curves/serialization.hpp"
#include "koszul/engine/koszul_complex.hpp"
#include "koszul/error.hpp"
#include "koszul/linalg/elimination.hpp"
#include "koszul/linalg/wedge.hpp"
#include "koszul/verify/quadrics.hpp"

namespace koszul::verify {

using engine::KoszulComplex;
using engine::kernel_bundle_h0;

namespace {

void require_range(std::size_t p, std::size_t r) {
  if (p < 1 || p > r) throw std::out_of_range("p must lie in [1, r]");
}

bool images_coincide(const SectionBasis& v, const PointOnCurve& u, const PointOnCurve& w) {
  const ProjectiveMap map(v);
  const auto a = map.image(u);
  const auto b = map.image(w);
  return linalg::rank(linalg::RatMatrix::from_dense({a, b})) < 2;
}

}  // namespace

PropKp1Result prop_kp1_check(const LineBundle& a, const PointOnCurve& u, const PointOnCurve& v,
                             std::size_t p, std::uint64_t seed) {
  const KoszulComplex y(a, std::nullopt, 1);
  require_range(p, y.r());
  PropKp1Result result;
  result.k_y = y.cell(p, 1).k;
  result.precondition_met = result.k_y == 0;
  if (!result.precondition_met) return result;
  const auto bridge = curves::attach_bridge(a, u, v, seed);
  result.x_hash = curves::model_hash(bridge.bundle);
  const KoszulComplex x(bridge.bundle, std::nullopt, 1);
  if (x.r() != y.r()) throw InvariantViolation("bridge attachment changed h^0");
  result.k_x = x.cell(p, 1).k;
  if (*result.k_x != 0) {
    throw InvariantViolation("K_{p,1}(Y,A) = 0 but K_{p,1}(X,L) != 0 on model " +
                             curves::hash_hex(result.x_hash));
  }
  return result;
}

RankConditionResult eqnrr_check(const LineBundle& a, std::size_t p, const PointOnCurve& u,
                        const PointOnCurve& v) {
  if (u == v) throw ModelError("the rank condition needs two distinct points");
  const auto sections = curves::h0_basis(a);
  const std::size_t r = sections.dimension() - 1;
  require_range(p, r);
  const PointOnCurve points[] = {u, v};
  const auto vanishing = curves::twist_down(sections, points);
  RankConditionResult result;
  result.degenerate =
      vanishing.dimension() + 2 != sections.dimension() || images_coincide(sections, u, v);
  result.lhs = kernel_bundle_h0(sections, p, vanishing);
  result.h0_full = kernel_bundle_h0(sections, p, sections);
  result.correction = 2 * static_cast<std::size_t>(linalg::binomial(static_cast<std::int64_t>(r),
                                                                    static_cast<std::int64_t>(p)));
  if (static_cast<long>(result.lhs) < result.rhs()) {
    throw InvariantViolation("h^0(Lambda^p M_A (x) A(-u-v)) dropped by more than 2 C(r,p)");
  }
  return result;
}

DualRankCondition dual_rank_condition(const LineBundle& a, std::size_t p, const PointOnCurve& u,
                                      const PointOnCurve& v) {
  const auto sections = curves::h0_basis(a);
  const std::size_t r = sections.dimension() - 1;
  require_range(p, r);
  const auto omega = curves::dualizing_bundle(a.curve_ptr());
  const PointOnCurve points[] = {u, v};
  const auto twist = curves::point_divisor_bundle(a.curve_ptr(), points);
  DualRankCondition result;
  result.h0_canonical = kernel_bundle_h0(sections, r - p, curves::h0_basis(omega));
  result.h0_twisted = kernel_bundle_h0(sections, r - p, curves::h0_basis(omega.tensor(twist)));
  return result;
}

DualityResult duality_check(const LineBundle& a, std::size_t p) {
  const KoszulComplex complex(a, std::nullopt, 2);
  require_range(p, complex.r());
  DualityResult result;
  result.k_pminus1_2 = complex.cell(p - 1, 2).k;
  result.twisted = engine::twisted_k00(a, p);
  return result;
}

TwistedQuotientResult twisted_quotient_check(const LineBundle& a, const PointOnCurve& u, const PointOnCurve& v,
                          std::size_t p, std::uint64_t seed) {
  const auto sections = curves::h0_basis(a);
  const std::size_t r = sections.dimension() - 1;
  require_range(p, r);
  TwistedQuotientResult result;

  const auto bridge = curves::attach_bridge(a, u, v, seed);
  result.x_hash = curves::model_hash(bridge.bundle);
  result.lhs = engine::twisted_k00(bridge.bundle, p);

  const auto& y = a.curve_ptr();
  const auto omega = curves::dualizing_bundle(y);
  const PointOnCurve points[] = {u, v};
  const auto omega_uv = omega.tensor(curves::point_divisor_bundle(y, points));
  result.numerator = kernel_bundle_h0(sections, r - p, curves::h0_basis(omega_uv));
  const auto incoming =
      engine::koszul_map(sections, r - p + 1, curves::h0_basis(omega.tensor(a.dual())),
                         curves::h0_basis(omega));
  result.denominator = incoming.rows() == 0 || incoming.cols() == 0 ? 0 : linalg::rank(incoming);
  result.twisted_y = engine::twisted_k00(a, omega, p);
  result.rank_condition = eqnrr_check(a, p, u, v);
  return result;
}

}  // namespace koszul::verify
