#include <gtest/gtest.h>

#include "koszul/curves/bridge.hpp"
#include "koszul/curves/dualizing.hpp"
#include "koszul/curves/sampling.hpp"
#include "koszul/curves/sections.hpp"
#include "koszul/curves/serialization.hpp"
#include "koszul/error.hpp"
#include "koszul/linalg/elimination.hpp"
#include "oracles.hpp"

using namespace koszul;
using namespace koszul::curves;

namespace {

ProjPoint pt(long a) { return affine_point(Rat(a)); }

CurvePtr line(std::uint64_t seed = 0) {
  return std::make_shared<const NodalCurve>(1, std::vector<Node>{}, seed);
}

// Two lines meeting at two points.
CurvePtr two_cycle() {
  return std::make_shared<const NodalCurve>(
      2, std::vector<Node>{{{0, pt(0)}, {1, pt(1)}}, {{0, pt(2)}, {1, point_at_infinity()}}}, 5);
}

// Closed chain of n lines.
CurvePtr ring(std::size_t n) {
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back({{i, pt(1)}, {(i + 1) % n, pt(-1)}});
  return std::make_shared<const NodalCurve>(n, nodes, 3);
}

CurvePtr theta() {
  return std::make_shared<const NodalCurve>(
      2, std::vector<Node>{{{0, pt(0)}, {1, pt(3)}}, {{0, pt(1)}, {1, pt(-2)}},
                           {{0, point_at_infinity()}, {1, pt(5)}}},
      1);
}

std::size_t h0(const LineBundle& l) { return h0_basis(l).dimension(); }

std::size_t h1(const LineBundle& l) {
  return h0(dualizing_bundle(l.curve_ptr()).tensor(l.dual()));
}

}  // namespace

TEST(NodalCurve, RejectsInvalidGluingData) {
  EXPECT_THROW(NodalCurve(2, {{{0, pt(0)}, {0, pt(1)}}}, 0), ModelError);  // self-node
  EXPECT_THROW(NodalCurve(2, {}, 0), ModelError);                           // disconnected
  EXPECT_THROW(NodalCurve(3, {{{0, pt(0)}, {1, pt(0)}}, {{0, pt(0)}, {2, pt(0)}}}, 0),
               ModelError);  // shared branch point
  EXPECT_THROW(make_point(Rat(0), Rat(0)), ModelError);
  EXPECT_EQ(two_cycle()->arithmetic_genus(), 1);
  EXPECT_EQ(theta()->arithmetic_genus(), 2);
  EXPECT_EQ(ring(3)->arithmetic_genus(), 1);
  EXPECT_FALSE(two_cycle()->is_smooth_point({0, pt(0)}));
  EXPECT_TRUE(two_cycle()->is_smooth_point({0, pt(1)}));
}

TEST(Sections, SingleComponent) {
  for (long d = 0; d <= 8; ++d) EXPECT_EQ(h0(LineBundle(line(), {d}, {})), static_cast<std::size_t>(d + 1));
  EXPECT_EQ(h0(LineBundle(line(), {-1}, {})), 0u);
}

TEST(Sections, TwoCycleConstants) {
  EXPECT_EQ(h0(LineBundle(two_cycle(), {0, 0}, {Rat(3), Rat(3)})), 1u);
  EXPECT_EQ(h0(LineBundle(two_cycle(), {0, 0}, {Rat(3), Rat(-2)})), 0u);
  EXPECT_EQ(h0(LineBundle(two_cycle(), {1, 1}, {Rat(2), Rat(-7, 3)})), 2u);
}

TEST(Sections, BasisSatisfiesNodeConstraints) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto l = oracle::random_bundle(seed, 4, 3, -1, 4);
    const auto basis = h0_basis(l);
    for (const auto& s : basis.sections()) {
      for (std::size_t n = 0; n < l.curve().nodes().size(); ++n) {
        const auto& node = l.curve().nodes()[n];
        ASSERT_EQ(evaluate_section(l, s, node.a), l.gluings()[n] * evaluate_section(l, s, node.b));
      }
    }
    ASSERT_EQ(linalg::rank(linalg::RatMatrix::from_dense(basis.sections())), basis.dimension());
  }
}

TEST(Dualizing, DegreesAndSections) {
  const auto w1 = dualizing_bundle(line());
  EXPECT_EQ(w1.degrees(), std::vector<long>{-2});
  EXPECT_EQ(h0(w1), 0u);
  const auto w2 = dualizing_bundle(two_cycle());
  EXPECT_EQ(w2.degrees(), (std::vector<long>{0, 0}));
  EXPECT_EQ(h0(w2), 1u);
  EXPECT_EQ(h0(dualizing_bundle(theta())), 2u);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto curve = oracle::random_bundle(seed, 5, 4, 0, 0).curve_ptr();
    ASSERT_EQ(static_cast<long>(h0(dualizing_bundle(curve))), curve->arithmetic_genus());
  }
}

TEST(Dualizing, ResidueOracleExamples) {
  EXPECT_EQ(h0_residue_oracle(LineBundle::trivial(line())), 0u);
  EXPECT_EQ(h0_residue_oracle(LineBundle::trivial(ring(3))), 1u);
  EXPECT_EQ(h0_residue_oracle(LineBundle::trivial(theta())), 2u);
}

// The residue model and the gluing model agree on every twist.
TEST(Dualizing, ResidueOracleAgreesOnTwists) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto m = oracle::random_bundle(seed, 4, 4, -2, 3);
    const auto omega = dualizing_bundle(m.curve_ptr());
    ASSERT_EQ(h0_residue_oracle(m), h0(omega.tensor(m))) << "seed " << seed;
    ASSERT_EQ(h0_residue_oracle(m.dual()), h0(omega.tensor(m.dual()))) << "seed " << seed;
  }
}

TEST(Dualizing, RiemannRoch) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto l = oracle::random_bundle(seed, 4, 4, 0, 4);
    const long lhs = static_cast<long>(h0(l)) - static_cast<long>(h1(l));
    ASSERT_EQ(lhs, l.total_degree() - l.curve().arithmetic_genus() + 1) << "seed " << seed;
  }
}

TEST(LineBundle, RescalingGivesIsomorphicBundle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto l = oracle::random_bundle(seed, 4, 3, -1, 3);
    std::vector<Rat> factors;
    for (std::size_t i = 0; i < l.curve().component_count(); ++i) factors.emplace_back(static_cast<long>(i + 2), 3);
    const auto m = l.rescaled(factors);
    for (long k = -1; k <= 2; ++k) ASSERT_EQ(h0(l.power(k)), h0(m.power(k)));
  }
}

TEST(Multiply, Examples) {
  const LineBundle o1(line(), {1}, {});
  const RatVector s = {Rat(1), Rat(0)}, t = {Rat(0), Rat(1)}, zero = {Rat(0), Rat(0)};
  EXPECT_EQ(multiply(o1, s, o1, t), (RatVector{Rat(0), Rat(1), Rat(0)}));
  EXPECT_EQ(multiply(o1, s, o1, zero), (RatVector{Rat(0), Rat(0), Rat(0)}));

  const LineBundle l(two_cycle(), {1, 1}, {Rat(2), Rat(-7, 3)});
  const auto basis = h0_basis(l);
  const auto square = h0_basis(l.tensor(l));
  EXPECT_EQ(square.bundle().degrees(), (std::vector<long>{2, 2}));
  for (const auto& x : basis.sections())
    for (const auto& y : basis.sections()) EXPECT_TRUE(square.contains(multiply(l, x, l, y)));
}

TEST(TwistDown, Examples) {
  const auto o5 = h0_basis(LineBundle(line(), {5}, {}));
  const PointOnCurve u{0, pt(2)}, v{0, pt(-3)};
  const PointOnCurve one[] = {u};
  const PointOnCurve two[] = {u, v};
  EXPECT_EQ(twist_down(o5, one).dimension(), 5u);
  EXPECT_EQ(twist_down(o5, two).dimension(), 4u);

  const auto cyc = h0_basis(LineBundle(two_cycle(), {1, 1}, {Rat(2), Rat(-7, 3)}));
  const PointOnCurve general[] = {{0, pt(5)}, {1, pt(4)}};
  EXPECT_EQ(twist_down(cyc, general).dimension(), 0u);

  const PointOnCurve node[] = {{0, pt(0)}};
  EXPECT_THROW(twist_down(cyc, node), ModelError);
}

TEST(Bridge, RationalNormalQuartic) {
  const LineBundle a(line(7), {4}, {});
  const auto x = attach_bridge(a, {0, pt(1)}, {0, pt(-2)}, 7);
  EXPECT_EQ(x.curve->arithmetic_genus(), 1);
  EXPECT_EQ(x.bundle.degrees(), (std::vector<long>{4, 1}));
  EXPECT_EQ(h0(x.bundle), 5u);

  Sampler s(3);
  const auto u = s.smooth_point(*x.curve), v = s.smooth_point(*x.curve, std::span(&u, 1));
  const auto x2 = attach_bridge(x.bundle, u, v, 8);
  EXPECT_EQ(x2.curve->arithmetic_genus(), 2);
  EXPECT_EQ(x2.bundle.total_degree(), 6);
  EXPECT_EQ(h0(x2.bundle), 5u);

  EXPECT_THROW(attach_bridge(a, {0, pt(1)}, {0, pt(1)}, 1), ModelError);
  EXPECT_THROW(attach_bridge(x.bundle, x.u, {0, pt(3)}, 1), ModelError);
}

// Restriction to Y: sections extend uniquely, and the three dualizing-sheaf
// restrictions are isomorphisms (as dimensions).
TEST(Bridge, RestrictionIsomorphisms) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto a = oracle::random_bundle(seed, 3, 2, 1, 4);
    Sampler s(seed);
    const auto u = s.smooth_point(a.curve());
    const auto v = s.smooth_point(a.curve(), std::span(&u, 1));
    const auto x = attach_bridge(a, u, v, seed);
    ASSERT_EQ(h0(x.bundle), h0(a));

    const auto omega_x = dualizing_bundle(x.curve);
    const auto omega_y = dualizing_bundle(a.curve_ptr());
    const PointOnCurve uv[] = {u, v};
    const auto k_uv = omega_y.tensor(point_divisor_bundle(a.curve_ptr(), uv));
    EXPECT_EQ(omega_x.degrees()[x.bridge_component], 0);
    for (std::size_t i = 0; i < a.curve().component_count(); ++i) {
      EXPECT_EQ(omega_x.degrees()[i], k_uv.degrees()[i]);
    }
    ASSERT_EQ(h0(omega_x), h0(k_uv));
    ASSERT_EQ(h0(omega_x.tensor(x.bundle.dual())), h0(omega_y.tensor(a.dual())));
    ASSERT_EQ(h0(omega_x.tensor(x.bundle)), h0(k_uv.tensor(a)));
  }
}

TEST(Sampling, DeterministicAndBounded) {
  Sampler a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const Rat x = a.small_rational(9);
    ASSERT_EQ(x, b.small_rational(9));
    ASSERT_LE(abs(x.get_num()), 9);
    ASSERT_LE(x.get_den(), 9);
  }
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
  int calls = 0;
  EXPECT_THROW(with_resampling(
                   1, "never", [&](std::uint64_t) { return ++calls; }, [](int) { return false; }),
               SamplingExhausted);
  EXPECT_EQ(calls, kMaxResampleAttempts);
}

TEST(Serialization, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto l = oracle::random_bundle(seed, 4, 4, -1, 5);
    const std::string text = serialize_model(l);
    const auto back = parse_model(text);
    ASSERT_EQ(serialize_model(back), text);
    ASSERT_EQ(model_hash(back), model_hash(l));
    ASSERT_EQ(h0(back), h0(l));
  }
  EXPECT_EQ(hash_hex(0xabcULL), "0000000000000abc");
  EXPECT_THROW(parse_model("{\"components\": 1}"), ModelError);
}
