#include "koszul/verify/induction.hpp"

#include "koszul/curves/bridge.hpp"
#include "koszul/curves/sampling.hpp"
#include "koszul/engine/koszul_complex.hpp"
#include "koszul/verify/propositions.hpp"
#include "koszul/verify/quadrics.hpp"

namespace koszul::verify {

using curves::mix_seed;
using curves::PointOnCurve;

namespace {

nlohmann::json point_json(const PointOnCurve& p) {
  return nlohmann::json::array(
      {p.component, nlohmann::json::array({linalg::format_rat(p.point.a), linalg::format_rat(p.point.b)})});
}

}  // namespace

InductionReport induction_driver(const curves::LineBundle& base, std::size_t steps, std::size_t p,
                                 std::uint64_t seed, bool with_timing) {
  InductionReport report;
  report.base = gv_status(base, p, with_timing);
  if (!report.base.holds) {
    report.diagnostic = "base model does not satisfy GV(" + std::to_string(p) +
                        "): condition (1) fails with k_{p,1} = " + std::to_string(report.base.k_p1) +
                        ", condition (2) fails with k_{p-1,2} = " +
                        std::to_string(report.base.k_pminus1_2);
    return report;
  }

  curves::LineBundle current = base;
  for (std::size_t step = 0; step < steps; ++step) {
    const engine::KoszulComplex y(current, std::nullopt, 2);
    const auto k_p1 = y.cell(p, 1).k;
    const auto k_pm1_2 = y.cell(p - 1, 2).k;
    const bool condition1 = k_p1 == 0;
    if (!condition1 && k_pm1_2 != 0) {
      report.diagnostic = "step " + std::to_string(step + 1) +
                          ": neither sufficient condition holds on Y: condition (1) fails with "
                          "k_{p,1} = " + std::to_string(k_p1) +
                          ", condition (2) fails with k_{p-1,2} = " + std::to_string(k_pm1_2);
      return report;
    }

    InductionStep st;
    st.kp1_vanishes = condition1;
    bool found = false;
    const auto& curve = current.curve();
    for (int attempt = 0; attempt < curves::kMaxResampleAttempts && !found; ++attempt) {
      curves::Sampler sampler(mix_seed(seed, (step << 8) + static_cast<std::uint64_t>(attempt)));
      st.u = sampler.smooth_point(curve);
      const PointOnCurve avoid[] = {st.u};
      st.v = sampler.smooth_point(curve, avoid);
      st.attempts = attempt + 1;
      st.rank_condition = false;
      st.quadric_witness.reset();
      if (k_pm1_2 == 0) {
        if (p == 1 && k_p1 > 0) {
          st.quadric_witness = quadric_secant_witness(current, st.u, st.v).has_value();
        }
        st.rank_condition = eqnrr_check(current, p, st.u, st.v).holds();
      }
      found = condition1 || st.rank_condition;
    }
    if (!found) {
      report.exhausted = true;
      report.diagnostic = "step " + std::to_string(step + 1) +
                          ": condition (1) fails (k_{p,1} = " + std::to_string(k_p1) +
                          ") and no sampled pair u, v satisfied the rank condition";
      return report;
    }

    const auto bridge = curves::attach_bridge(current, st.u, st.v, mix_seed(seed, 0x10000 + step));
    st.certificate = gv_status(bridge.bundle, p, with_timing);
    st.certificate.caveat = kSmoothingCaveat;
    const bool holds = st.certificate.holds;
    report.steps.push_back(st);
    if (!holds) {
      report.diagnostic = "step " + std::to_string(step + 1) +
                          ": a sufficient condition held on Y but GV(p) fails on the degeneration";
      return report;
    }
    current = bridge.bundle;
  }
  return report;
}

nlohmann::json to_json(const InductionStep& step) {
  auto j = to_json(step.certificate);
  j["u"] = point_json(step.u);
  j["v"] = point_json(step.v);
  j["conditions"] = {{"kp1_vanishes", step.kp1_vanishes},
                     {"rank_condition", step.rank_condition},
                     {"quadric_witness", step.quadric_witness ? nlohmann::json(*step.quadric_witness)
                                                              : nlohmann::json(nullptr)}};
  j["attempts"] = step.attempts;
  return j;
}

}  // namespace koszul::verify
