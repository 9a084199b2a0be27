#include "koszul/curves/dualizing.hpp"

#include "koszul/error.hpp"
#include "koszul/linalg/elimination.hpp"

namespace koszul::curves {

namespace {

// Product of the linear forms vanishing at the other branch points of the
// component, evaluated at `at`.
Rat other_branch_product(const std::vector<ProjPoint>& branches, const ProjPoint& at) {
  Rat product = 1;
  for (const auto& r : branches) {
    if (r == at) continue;
    product *= linear_form_value(r, at);
  }
  return product;
}

// Polynomials in a local coordinate, lowest degree first.
using Poly = RatVector;

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Coefficient of x^-1 in num/den as a Laurent series at x = 0.
Rat laurent_residue(const Poly& num, const Poly& den) {
  std::size_t order = 0;
  while (order < den.size() && den[order] == 0) ++order;
  if (order == den.size()) throw InvariantViolation("residue of a form with zero denominator");
  if (order == 0) return Rat(0);
  // num/den = x^-order * num * u^-1 with u = den / x^order, u(0) != 0.
  Poly u(den.begin() + static_cast<long>(order), den.end());
  const std::size_t need = order;  // coefficients 0..order-1 of num * u^-1
  Poly inverse(need);
  inverse[0] = 1 / u[0];
  for (std::size_t k = 1; k < need; ++k) {
    Rat acc = 0;
    for (std::size_t i = 1; i <= k && i < u.size(); ++i) acc += u[i] * inverse[k - i];
    inverse[k] = -acc / u[0];
  }
  Rat residue = 0;
  for (std::size_t i = 0; i < need && i < num.size(); ++i) residue += num[i] * inverse[need - 1 - i];
  return residue;
}

// Residue at branch P of G(s,t) (t ds - s dt) / prod_R l_R(s,t), where G is the
// monomial s^(e-j) t^j, written in the standard chart around P.
Rat monomial_residue(long e, std::size_t j, const std::vector<ProjPoint>& branches,
                     const ProjPoint& p) {
  const auto deg = static_cast<std::size_t>(e);
  Poly num;
  Poly den{Rat(1)};
  if (p.b != 0) {
    // Chart t = 1, z = z0 + x: the differential is G(z, 1) dz / prod l_R(z, 1).
    const Rat& z0 = p.a;
    Poly shifted{Rat(1)};
    const Poly z_local{z0, Rat(1)};
    for (std::size_t k = 0; k < deg - j; ++k) shifted = poly_mul(shifted, z_local);
    num = shifted;
    for (const auto& r : branches) den = poly_mul(den, Poly{r.b * z0 - r.a, r.b});
  } else {
    // Chart s = 1, t = w: the differential is -G(1, w) dw / prod l_R(1, w).
    num.assign(j + 1, Rat(0));
    num[j] = -1;
    for (const auto& r : branches) den = poly_mul(den, Poly{r.b, -r.a});
  }
  return laurent_residue(num, den);
}

}  // namespace

LineBundle dualizing_bundle(const CurvePtr& curve) {
  const auto n = curve->component_count();
  std::vector<long> degrees(n);
  for (std::size_t c = 0; c < n; ++c) degrees[c] = static_cast<long>(curve->branch_count(c)) - 2;
  std::vector<Rat> gluings;
  for (const auto& node : curve->nodes()) {
    const Rat pa = other_branch_product(curve->branch_points(node.a.component), node.a.point);
    const Rat pb = other_branch_product(curve->branch_points(node.b.component), node.b.point);
    // res_a = F_a(P) / pa and res_b = F_b(Q) / pb must cancel.
    gluings.push_back(-pa / pb);
  }
  return LineBundle(curve, std::move(degrees), std::move(gluings));
}

std::size_t h0_residue_oracle(const LineBundle& twist) {
  const auto& curve = twist.curve();
  const auto comps = curve.component_count();
  std::vector<long> degrees(comps);
  for (std::size_t c = 0; c < comps; ++c) {
    degrees[c] = static_cast<long>(curve.branch_count(c)) - 2 + twist.degrees()[c];
  }
  const AmbientLayout layout(degrees);
  std::vector<linalg::Triplet> entries;
  const auto& nodes = curve.nodes();
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (int side = 0; side < 2; ++side) {
      const auto& branch = side == 0 ? nodes[n].a : nodes[n].b;
      const Rat scale = side == 0 ? Rat(1) : twist.gluings()[n];
      const long e = degrees[branch.component];
      if (e < 0) continue;
      const auto branches = curve.branch_points(branch.component);
      for (std::size_t j = 0; j <= static_cast<std::size_t>(e); ++j) {
        Rat r = monomial_residue(e, j, branches, branch.point);
        if (r != 0) entries.push_back({n, layout.offset(branch.component) + j, scale * r});
      }
    }
  }
  const linalg::RatMatrix constraints(nodes.size(), layout.dimension(), std::move(entries));
  return layout.dimension() - linalg::rank(constraints);
}

LineBundle point_divisor_bundle(const CurvePtr& curve, std::span<const PointOnCurve> points) {
  std::vector<long> degrees(curve->component_count(), 0);
  for (const auto& p : points) {
    if (!curve->is_smooth_point(p)) throw ModelError("divisor points must be smooth points");
    ++degrees[p.component];
  }
  auto canonical_value = [&](const PointOnCurve& at) {
    Rat v = 1;
    for (const auto& p : points) {
      if (p.component == at.component) v *= linear_form_value(p.point, at.point);
    }
    return v;
  };
  std::vector<Rat> gluings;
  for (const auto& node : curve->nodes()) {
    gluings.push_back(canonical_value(node.a) / canonical_value(node.b));
  }
  return LineBundle(curve, std::move(degrees), std::move(gluings));
}

}  // namespace koszul::curves
