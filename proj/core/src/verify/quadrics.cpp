#include "koszul/verify/quadrics.hpp"

#include "koszul/curves/sampling.hpp"
#include "koszul/error.hpp"
#include "koszul/linalg/elimination.hpp"
#include "koszul/verify/propositions.hpp"
#include "koszul/verify/status.hpp"

namespace koszul::verify {

using linalg::Triplet;

ProjectiveMap::ProjectiveMap(const SectionBasis& complete)
    : bundle_(complete.bundle()), sections_(complete.sections()) {}

ProjectiveMap::ProjectiveMap(LineBundle bundle, std::vector<RatVector> sections)
    : bundle_(std::move(bundle)), sections_(std::move(sections)) {
  const auto dim = bundle_.layout().dimension();
  for (const auto& s : sections_) {
    if (s.size() != dim) throw ModelError("section vector does not match the bundle layout");
  }
}

bool ProjectiveMap::nondegenerate() const {
  const auto dim = bundle_.layout().dimension();
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < sections_.size(); ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (sections_[r][c] != 0) entries.push_back({r, c, sections_[r][c]});
    }
  }
  return linalg::rank(RatMatrix(sections_.size(), dim, std::move(entries))) == sections_.size();
}

RatVector ProjectiveMap::image(const PointOnCurve& p) const {
  RatVector x;
  x.reserve(sections_.size());
  for (const auto& s : sections_) x.push_back(curves::evaluate_section(bundle_, s, p));
  return x;
}

Rat Quadric::value(const RatVector& x) const {
  Rat q = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < variables; ++i) {
    for (std::size_t j = i; j < variables; ++j, ++k) {
      if (coefficients[k] != 0) q += coefficients[k] * x[i] * x[j];
    }
  }
  return q;
}

Rat Quadric::polar(const RatVector& x, const RatVector& y) const {
  RatVector sum(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
  return value(sum) - value(x) - value(y);
}

std::vector<RatVector> Quadric::symmetric_matrix() const {
  std::vector<RatVector> s(variables, RatVector(variables));
  std::size_t k = 0;
  for (std::size_t i = 0; i < variables; ++i) {
    for (std::size_t j = i; j < variables; ++j, ++k) {
      if (i == j) {
        s[i][i] = coefficients[k];
      } else {
        s[i][j] = s[j][i] = coefficients[k] / 2;
      }
    }
  }
  return s;
}

RatMatrix symmetric_multiplication_matrix(const ProjectiveMap& map) {
  const auto& a = map.bundle();
  const auto n = map.variables();
  const auto square = a.tensor(a);
  std::vector<Triplet> entries;
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j, ++col) {
      const auto prod = curves::multiply(a, map.sections()[i], a, map.sections()[j]);
      for (std::size_t r = 0; r < prod.size(); ++r) {
        if (prod[r] != 0) entries.push_back({r, col, prod[r]});
      }
    }
  }
  return RatMatrix(square.layout().dimension(), n * (n + 1) / 2, std::move(entries));
}

std::vector<Quadric> quadrics_through(const ProjectiveMap& map) {
  std::vector<Quadric> out;
  for (auto& v : linalg::kernel_basis(symmetric_multiplication_matrix(map))) {
    out.push_back(Quadric{map.variables(), std::move(v)});
  }
  return out;
}

bool polar_form_vanishes_on_curve(const Quadric& q, const ProjectiveMap& map) {
  const auto s = q.symmetric_matrix();
  const auto& bundle = map.bundle();
  const auto comps = bundle.curve().component_count();
  const auto n = map.variables();
  for (std::size_t ci = 0; ci < comps; ++ci) {
    for (std::size_t cj = 0; cj < comps; ++cj) {
      // Coefficient matrix of the bihomogeneous form sum_ab S_ab f_a(x) f_b(y).
      const auto wi = bundle.layout().width(ci);
      const auto wj = bundle.layout().width(cj);
      std::vector<RatVector> m(wi, RatVector(wj));
      for (std::size_t a = 0; a < n; ++a) {
        const auto fa = curves::component_form(bundle, map.sections()[a], ci);
        for (std::size_t b = 0; b < n; ++b) {
          if (s[a][b] == 0) continue;
          const auto fb = curves::component_form(bundle, map.sections()[b], cj);
          for (std::size_t x = 0; x < wi; ++x) {
            if (fa[x] == 0) continue;
            for (std::size_t y = 0; y < wj; ++y) m[x][y] += s[a][b] * fa[x] * fb[y];
          }
        }
      }
      for (const auto& row : m) {
        for (const auto& e : row) {
          if (e != 0) return false;
        }
      }
    }
  }
  return true;
}

std::optional<QuadricWitness> find_secant_witness(const ProjectiveMap& map,
                                                  const std::vector<Quadric>& quadrics,
                                                  const PointOnCurve& u, const PointOnCurve& v) {
  const auto xu = map.image(u);
  const auto xv = map.image(v);
  for (const auto& q : quadrics) {
    Rat b = q.polar(xu, xv);
    if (b != 0) return QuadricWitness{q, q.symmetric_matrix(), u, v, std::move(b)};
  }
  return std::nullopt;
}

std::optional<QuadricWitness> quadric_secant_witness(const LineBundle& a, const PointOnCurve& u,
                                                     const PointOnCurve& v) {
  const ProjectiveMap map(curves::h0_basis(a));
  const auto quadrics = quadrics_through(map);
  if (quadrics.empty()) throw ModelError("quadric_secant_witness needs k_{1,1} > 0");
  auto witness = find_secant_witness(map, quadrics, u, v);
  const auto rank_condition = eqnrr_check(a, 1, u, v);
  if (!rank_condition.degenerate && witness.has_value() != rank_condition.holds()) {
    throw InvariantViolation(
        "secant-quadric witness and the rank condition disagree at the same pair of points");
  }
  return witness;
}

SecantCheck secant_noncontainment_check(const ProjectiveMap& map, std::uint64_t seed) {
  SecantCheck result;
  if (!map.nondegenerate()) {
    result.outcome = SecantOutcome::PreconditionFailed;
    return result;
  }
  auto quadrics = quadrics_through(map);
  curves::Sampler sampler(seed);
  if (!quadrics.empty()) {
    for (std::size_t c = 0; c < kSecantRandomCombinations; ++c) {
      Quadric combo{map.variables(), RatVector(quadrics.front().coefficients.size())};
      bool nonzero = false;
      for (const auto& q : quadrics) {
        const Rat w = sampler.small_rational(5);
        if (w == 0) continue;
        nonzero = true;
        for (std::size_t k = 0; k < combo.coefficients.size(); ++k) {
          combo.coefficients[k] += w * q.coefficients[k];
        }
      }
      if (nonzero) quadrics.push_back(std::move(combo));
    }
  }
  result.outcome = SecantOutcome::Holds;
  const auto& curve = map.bundle().curve();
  for (const auto& q : quadrics) {
    ++result.quadrics_tested;
    bool witnessed = false;
    for (std::size_t attempt = 0; attempt < kSecantPairBudget && !witnessed; ++attempt) {
      const auto u = sampler.smooth_point(curve);
      const PointOnCurve avoid[] = {u};
      const auto v = sampler.smooth_point(curve, avoid);
      ++result.pairs_tried;
      witnessed = q.polar(map.image(u), map.image(v)) != 0;
    }
    if (witnessed) {
      ++result.witnessed;
      continue;
    }
    if (polar_form_vanishes_on_curve(q, map)) {
      throw InvariantViolation(
          "a quadric through a nondegenerate curve contains its secant variety");
    }
    result.outcome = SecantOutcome::Inconclusive;
  }
  return result;
}

const char* to_string(SecantOutcome outcome) {
  switch (outcome) {
    case SecantOutcome::Holds: return "holds";
    case SecantOutcome::Inconclusive: return "inconclusive";
    case SecantOutcome::PreconditionFailed: return "precondition-failed";
  }
  return "?";
}

}  // namespace koszul::verify
