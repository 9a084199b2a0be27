#include "koszul/curves/sections.hpp"

#include "koszul/error.hpp"
#include "koszul/linalg/elimination.hpp"

namespace koszul::curves {

using linalg::RatMatrix;
using linalg::Triplet;

SectionBasis::SectionBasis(LineBundle bundle, std::vector<RatVector> rref_rows,
                           std::vector<std::size_t> pivots)
    : bundle_(std::move(bundle)), sections_(std::move(rref_rows)), pivots_(std::move(pivots)) {
  if (sections_.size() != pivots_.size()) {
    throw InvariantViolation("section basis: one pivot per basis vector required");
  }
}

SectionBasis SectionBasis::span_of(LineBundle bundle, const std::vector<RatVector>& vectors) {
  const auto dim = bundle.layout().dimension();
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != dim) throw InvariantViolation("section vector has the wrong length");
    for (std::size_t c = 0; c < dim; ++c) {
      if (vectors[r][c] != 0) entries.push_back({r, c, vectors[r][c]});
    }
  }
  auto rref = linalg::reduced_echelon(RatMatrix(vectors.size(), dim, std::move(entries)));
  return SectionBasis(std::move(bundle), std::move(rref.rows), std::move(rref.pivots));
}

RatVector SectionBasis::coordinates_unchecked(const RatVector& x) const {
  RatVector coords(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) coords[k] = x[pivots_[k]];
  return coords;
}

bool SectionBasis::contains(const RatVector& x) const {
  RatVector residual = x;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rat c = x[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= c * sections_[k][i];
  }
  for (const auto& v : residual) {
    if (v != 0) return false;
  }
  return true;
}

RatVector SectionBasis::coordinates(const RatVector& x) const {
  if (x.size() != bundle_.layout().dimension() || !contains(x)) {
    throw InvariantViolation("vector is not a member of the section space");
  }
  return coordinates_unchecked(x);
}

Rat SectionBasis::evaluate(std::size_t k, const PointOnCurve& p) const {
  return evaluate_section(bundle_, sections_.at(k), p);
}

std::span<const Rat> component_form(const LineBundle& bundle, const RatVector& section,
                                    std::size_t component) {
  const auto layout = bundle.layout();
  return std::span<const Rat>(section).subspan(layout.offset(component), layout.width(component));
}

Rat evaluate_section(const LineBundle& bundle, const RatVector& section, const PointOnCurve& p) {
  return evaluate_form(component_form(bundle, section, p.component), p.point);
}

RatMatrix node_constraint_matrix(const LineBundle& bundle) {
  const auto layout = bundle.layout();
  const auto& nodes = bundle.curve().nodes();
  std::vector<Triplet> entries;
  auto add_branch = [&](std::size_t row, const PointOnCurve& branch, const Rat& scale) {
    const auto width = layout.width(branch.component);
    if (width == 0) return;
    const auto offset = layout.offset(branch.component);
    // Value of monomial s^(d-j) t^j at the representative.
    if (branch.point.b == 0) {
      entries.push_back({row, offset, scale});
      return;
    }
    Rat power = 1;
    for (std::size_t j = width; j-- > 0;) {
      entries.push_back({row, offset + j, scale * power});
      power *= branch.point.a;
    }
  };
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    add_branch(n, nodes[n].a, Rat(1));
    add_branch(n, nodes[n].b, -bundle.gluings()[n]);
  }
  return RatMatrix(nodes.size(), layout.dimension(), std::move(entries));
}

SectionBasis h0_basis(const LineBundle& bundle) {
  const auto constraints = node_constraint_matrix(bundle);
  return SectionBasis::span_of(bundle, linalg::kernel_basis(constraints));
}

RatVector multiply(const LineBundle& a, const RatVector& x, const LineBundle& b, const RatVector& y) {
  if (!a.same_curve(b)) throw ModelError("multiplying sections on different curves");
  const auto layout_a = a.layout();
  const auto layout_b = b.layout();
  std::vector<long> degrees(a.degrees().size());
  for (std::size_t i = 0; i < degrees.size(); ++i) degrees[i] = a.degrees()[i] + b.degrees()[i];
  const AmbientLayout layout(degrees);
  RatVector out(layout.dimension());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (layout.width(i) == 0 || layout_a.width(i) == 0 || layout_b.width(i) == 0) continue;
    const auto prod = multiply_forms(component_form(a, x, i), component_form(b, y, i));
    std::copy(prod.begin(), prod.end(), out.begin() + static_cast<long>(layout.offset(i)));
  }
  return out;
}

SectionBasis twist_down(const SectionBasis& space, std::span<const PointOnCurve> points) {
  const auto& curve = space.bundle().curve();
  for (const auto& p : points) {
    if (!curve.is_smooth_point(p)) throw ModelError("twist_down needs smooth points of the curve");
  }
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t k = 0; k < space.dimension(); ++k) {
      Rat v = space.evaluate(k, points[r]);
      if (v != 0) entries.push_back({r, k, std::move(v)});
    }
  }
  const auto kernel =
      linalg::kernel_basis(RatMatrix(points.size(), space.dimension(), std::move(entries)));
  const auto dim = space.bundle().layout().dimension();
  std::vector<RatVector> vectors;
  for (const auto& coeffs : kernel) {
    RatVector v(dim);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      for (std::size_t i = 0; i < dim; ++i) v[i] += coeffs[k] * space.section(k)[i];
    }
    vectors.push_back(std::move(v));
  }
  return SectionBasis::span_of(space.bundle(), vectors);
}

bool is_globally_generated(const SectionBasis& space) {
  const auto& bundle = space.bundle();
  for (std::size_t c = 0; c < bundle.curve().component_count(); ++c) {
    std::vector<RatVector> forms;
    for (const auto& s : space.sections()) {
      const auto f = component_form(bundle, s, c);
      forms.emplace_back(f.begin(), f.end());
    }
    if (bundle.degrees()[c] < 0 || have_common_zero(forms)) return false;
  }
  return true;
}

}  // namespace koszul::curves
