#include <gtest/gtest.h>

#include "koszul/curves/sampling.hpp"
#include "koszul/engine/koszul_complex.hpp"
#include "koszul/error.hpp"
#include "koszul/runner/models.hpp"
#include "koszul/verify/induction.hpp"
#include "koszul/verify/propositions.hpp"
#include "koszul/verify/quadrics.hpp"
#include "koszul/verify/status.hpp"

using namespace koszul;
using namespace koszul::verify;
using curves::affine_point;
using curves::point_at_infinity;
using linalg::Rat;

namespace {

LineBundle model(const std::string& name, std::uint64_t seed = 1) {
  return runner::builtin_model(name, seed);
}

std::pair<PointOnCurve, PointOnCurve> pair_on(const LineBundle& l, std::uint64_t seed) {
  curves::Sampler s(seed);
  const auto u = s.smooth_point(l.curve());
  return {u, s.smooth_point(l.curve(), std::span(&u, 1))};
}

// Quadric from (i, j, c) terms.
Quadric quadric(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, long>> terms) {
  Quadric q{n, RatVector(n * (n + 1) / 2, Rat(0))};
  for (auto [i, j, c] : terms) {
    const std::size_t index = i * n - i * (i - 1) / 2 + (j - i);
    q.coefficients[index] = c;
  }
  return q;
}

}  // namespace

TEST(Mrc, ClassifyTruthTable) {
  EXPECT_EQ(classify(0, 0), MrcVerdict::Bijective);
  EXPECT_EQ(classify(0, 3), MrcVerdict::Injective);
  EXPECT_EQ(classify(2, 0), MrcVerdict::Surjective);
  EXPECT_EQ(classify(1, 1), MrcVerdict::Fails);
}

TEST(Mrc, GoldenValues) {
  const auto conic = mrc_status(model("conic"));
  EXPECT_EQ(conic.k11, 1u);
  EXPECT_EQ(conic.k02, 0u);
  EXPECT_EQ(conic.sym2_dimension, 6u);
  EXPECT_EQ(conic.h0_square, 5u);
  EXPECT_EQ(conic.rank, 5u);
  EXPECT_EQ(conic.verdict, MrcVerdict::Surjective);

  const auto quartic = mrc_status(model("rational-normal(4)"));
  EXPECT_EQ(quartic.k11, 6u);
  EXPECT_EQ(quartic.k02, 0u);
  EXPECT_EQ(quartic.sym2_dimension, 15u);
  EXPECT_EQ(quartic.rank, 9u);

  const auto canonical = mrc_status(model("canonical-graph(3)"));
  EXPECT_EQ(canonical.sym2_dimension, 6u);
  EXPECT_EQ(canonical.h0_square, 6u);
  EXPECT_EQ(canonical.verdict, MrcVerdict::Bijective);

  EXPECT_EQ(mrc_status(model("double-cover(3,3)")).verdict, MrcVerdict::Fails);
}

TEST(Mrc, AgreesWithKoszulCells) {
  for (const char* name : {"conic", "rational-normal(5)", "cycle-genus-1(5)", "canonical-graph(4)",
                           "double-cover(3,3)"}) {
    const auto l = model(name);
    const engine::KoszulComplex c(l, std::nullopt, 2);
    const auto s = mrc_status(l);
    EXPECT_EQ(s.k11, c.cell(1, 1).k) << name;
    EXPECT_EQ(s.k02, c.cell(0, 2).k) << name;
  }
}

TEST(Gv, Examples) {
  const auto l = model("rational-normal(4)");
  const auto c = gv_status(l, 3);
  EXPECT_EQ(c.k_p1, 3u);
  EXPECT_EQ(c.k_pminus1_2, 0u);
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.caveat);
  EXPECT_THROW(gv_status(l, 0), std::out_of_range);
  EXPECT_THROW(gv_status(l, 4), std::out_of_range);

  for (const char* name : {"rational-normal(3)", "cycle-genus-1(4)", "canonical-graph(4)", "double-cover(3,3)"}) {
    const auto m = model(name);
    const auto g = gv_status(m, 1);
    EXPECT_EQ(g.holds, mrc_status(m).verdict != MrcVerdict::Fails) << name;
    EXPECT_EQ(g.caveat.has_value(), m.curve().component_count() > 1) << name;
  }
  const auto j = to_json(gv_status(model("cycle-genus-1(4)"), 1));
  EXPECT_EQ(j["caveat"], kSmoothingCaveat);
  EXPECT_FALSE(j.contains("seconds"));
}

TEST(Kp1Propagation, Examples) {
  const auto quartic = model("rational-normal(4)");
  const auto [u, v] = pair_on(quartic, 3);
  // k_{3,1} = 3 on the quartic (Eagon-Northcott), so p = 3 is gated; the last
  // column p = r = 4 vanishes and propagates.
  const auto gated = prop_kp1_check(quartic, u, v, 3, 3);
  EXPECT_FALSE(gated.precondition_met);
  EXPECT_EQ(gated.k_y, 3u);
  const auto r = prop_kp1_check(quartic, u, v, 4, 3);
  EXPECT_TRUE(r.precondition_met);
  ASSERT_TRUE(r.k_x);
  EXPECT_EQ(*r.k_x, 0u);

  const auto conic = model("conic");
  const auto [a, b] = pair_on(conic, 4);
  const auto skipped = prop_kp1_check(conic, a, b, 1, 4);
  EXPECT_FALSE(skipped.precondition_met);
  EXPECT_EQ(skipped.k_y, 1u);
  EXPECT_FALSE(skipped.k_x);

  // Genus one after one attachment, then a second attachment.
  const auto y = runner::model_for_cell(1, 3, 4, 5);
  const auto [s, t] = pair_on(y, 6);
  const auto second = prop_kp1_check(y, s, t, 2, 6);
  EXPECT_TRUE(second.precondition_met);
  EXPECT_EQ(second.k_x.value_or(99), 0u);
}

TEST(RankCondition, Examples) {
  const auto quartic = model("rational-normal(4)");
  const auto [u, v] = pair_on(quartic, 1);
  const auto r = eqnrr_check(quartic, 1, u, v);
  EXPECT_EQ(r.h0_full, 16u);
  EXPECT_EQ(r.correction, 8u);
  EXPECT_EQ(r.lhs, 8u);
  EXPECT_TRUE(r.holds());

  const auto conic = model("conic");
  const auto [a, b] = pair_on(conic, 2);
  const auto c = eqnrr_check(conic, 1, a, b);
  EXPECT_EQ(c.h0_full, 4u);
  EXPECT_EQ(c.rhs(), 0);
  EXPECT_EQ(c.lhs, 0u);
  EXPECT_TRUE(c.holds());

  EXPECT_THROW(eqnrr_check(conic, 1, a, a), ModelError);
}

// The rank condition and its Serre-dual form are equivalent.
TEST(RankCondition, DualFormEquivalence) {
  for (const char* name : {"rational-normal(4)", "cycle-genus-1(5)", "canonical-graph(4)", "double-cover(2,3)"}) {
    const auto l = model(name);
    const auto r = static_cast<std::size_t>(engine::KoszulComplex(l, std::nullopt, 1).r());
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto [u, v] = pair_on(l, seed);
      for (std::size_t p = 1; p < r; ++p) {
        const auto e = eqnrr_check(l, p, u, v);
        if (e.degenerate) continue;
        EXPECT_EQ(e.holds(), dual_rank_condition(l, p, u, v).holds()) << name << " p=" << p;
      }
    }
  }
}

TEST(Duality, KoszulGroups) {
  for (const char* name : {"rational-normal(4)", "cycle-genus-1(4)", "cycle-genus-1(5)", "canonical-graph(4)",
                           "double-cover(3,3)"}) {
    const auto l = model(name);
    const auto r = engine::KoszulComplex(l, std::nullopt, 1).r();
    for (std::size_t p = 1; p <= r; ++p) {
      const auto d = duality_check(l, p);
      EXPECT_TRUE(d.holds()) << name << " p=" << p << ": " << d.k_pminus1_2 << " vs " << d.twisted;
    }
  }
}

TEST(TwistedQuotient, BridgeAttachments) {
  for (const char* name : {"rational-normal(4)", "cycle-genus-1(4)", "canonical-graph(4)", "double-cover(2,3)"}) {
    const auto l = model(name);
    const auto r = engine::KoszulComplex(l, std::nullopt, 1).r();
    const auto [u, v] = pair_on(l, 9);
    for (std::size_t p = 1; p < r; ++p) {
      const auto res = twisted_quotient_check(l, u, v, p, 9);
      EXPECT_TRUE(res.holds()) << name << " p=" << p;
      EXPECT_TRUE(res.agrees_with_rank_condition()) << name << " p=" << p;
    }
  }
}

TEST(Quadrics, PolarFormOnTwistedCubic) {
  const auto cubic = model("twisted-cubic");
  const ProjectiveMap map(curves::h0_basis(cubic));
  const PointOnCurve u{0, point_at_infinity()}, v{0, affine_point(Rat(0))};
  EXPECT_EQ(map.image(u), (RatVector{Rat(1), Rat(0), Rat(0), Rat(0)}));
  EXPECT_EQ(map.image(v), (RatVector{Rat(0), Rat(0), Rat(0), Rat(1)}));

  const auto xw_yz = quadric(4, {{0, 3, 1}, {1, 2, -1}});
  const auto xz_yy = quadric(4, {{0, 2, 1}, {1, 1, -1}});
  EXPECT_EQ(xw_yz.polar(map.image(u), map.image(v)), 1);
  EXPECT_EQ(xz_yy.polar(map.image(u), map.image(v)), 0);

  const auto m = symmetric_multiplication_matrix(map);
  for (const auto& q : {xw_yz, xz_yy}) {
    for (const auto& x : m * q.coefficients) EXPECT_EQ(x, 0);
  }
  EXPECT_EQ(quadrics_through(map).size(), 3u);
  EXPECT_TRUE(quadric_secant_witness(cubic, u, v).has_value());
}

TEST(Quadrics, WitnessInvariants) {
  for (const char* name : {"conic", "rational-normal(5)", "cycle-genus-1(5)", "canonical-graph(5)"}) {
    const auto l = model(name);
    const ProjectiveMap map(curves::h0_basis(l));
    const auto m = symmetric_multiplication_matrix(map);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto [u, v] = pair_on(l, seed);
      const auto w = quadric_secant_witness(l, u, v);
      ASSERT_TRUE(w) << name;
      EXPECT_NE(w->polar_value, 0);
      EXPECT_EQ(w->polar_value, w->quadric.polar(map.image(u), map.image(v)));
      for (const auto& x : m * w->quadric.coefficients) EXPECT_EQ(x, 0);
      // Symmetric array reproduces the quadric.
      const auto img = map.image(u);
      Rat xsx = 0;
      for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = 0; j < img.size(); ++j) xsx += img[i] * w->symmetric[i][j] * img[j];
      EXPECT_EQ(xsx, w->quadric.value(img));
    }
  }
  const auto plane_quartic = model("canonical-graph(3)");
  const auto [u, v] = pair_on(plane_quartic, 1);
  EXPECT_THROW(quadric_secant_witness(plane_quartic, u, v), ModelError);
}

TEST(Quadrics, SecantNonContainment) {
  for (long d = 3; d <= 6; ++d) {
    const auto l = model("rational-normal(" + std::to_string(d) + ")");
    const auto check = secant_noncontainment_check(ProjectiveMap(curves::h0_basis(l)), 7);
    EXPECT_EQ(check.outcome, SecantOutcome::Holds) << d;
    EXPECT_EQ(check.witnessed, check.quadrics_tested);
    EXPECT_EQ(check.quadrics_tested, static_cast<std::size_t>(d * (d - 1) / 2) + kSecantRandomCombinations);
  }
  // A conic spanning only a plane of P^3.
  const auto conic = model("conic");
  std::vector<RatVector> sections = curves::h0_basis(conic).sections();
  sections.push_back({Rat(1), Rat(0), Rat(1)});
  const ProjectiveMap degenerate(conic, sections);
  EXPECT_FALSE(degenerate.nondegenerate());
  EXPECT_EQ(secant_noncontainment_check(degenerate, 1).outcome, SecantOutcome::PreconditionFailed);
}

TEST(Induction, QuarticStrip) {
  const auto report = induction_driver(model("rational-normal(4)"), 5, 1, 11);
  ASSERT_TRUE(report.complete(5)) << report.diagnostic.value_or("");
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& c = report.steps[i].certificate;
    EXPECT_EQ(c.g, static_cast<long>(i + 1));
    EXPECT_EQ(c.d, static_cast<long>(i + 5));
    EXPECT_EQ(c.r, 4u);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.caveat.value_or(""), kSmoothingCaveat);
  }
}

TEST(Induction, ConicStrip) {
  const auto report = induction_driver(model("conic"), 2, 1, 2);
  ASSERT_TRUE(report.complete(2));
  EXPECT_EQ(report.steps[0].certificate.g, 1);
  EXPECT_EQ(report.steps[0].certificate.d, 3);
  EXPECT_EQ(report.steps[1].certificate.g, 2);
  EXPECT_EQ(report.steps[1].certificate.d, 4);
}

TEST(Induction, ReportsFailedConditions) {
  const auto report = induction_driver(model("double-cover(3,3)"), 2, 1, 1);
  EXPECT_FALSE(report.complete(2));
  EXPECT_TRUE(report.steps.empty());
  ASSERT_TRUE(report.diagnostic);
  EXPECT_NE(report.diagnostic->find("condition (1) fails"), std::string::npos);
  EXPECT_NE(report.diagnostic->find("condition (2) fails"), std::string::npos);
}
