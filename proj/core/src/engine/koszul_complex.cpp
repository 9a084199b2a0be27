#include "koszul/engine/koszul_complex.hpp"

#include "koszul/curves/dualizing.hpp"
#include "koszul/error.hpp"
#include "koszul/linalg/elimination.hpp"
#include "koszul/linalg/wedge.hpp"

namespace koszul::engine {

using linalg::Rat;
using linalg::RatVector;
using linalg::Triplet;
using linalg::WedgeBasis;

RatMatrix koszul_map(const SectionBasis& v, std::size_t p, const SectionBasis& source,
                     const SectionBasis& target) {
  const std::size_t n = v.dimension();
  const std::size_t ds = source.dimension();
  const std::size_t dt = target.dimension();
  const WedgeBasis domain(n, p);
  if (p == 0) return RatMatrix(0, domain.size() * ds);
  const WedgeBasis codomain(n, p - 1);
  if (domain.size() == 0 || ds == 0) return RatMatrix(codomain.size() * dt, domain.size() * ds);

  const auto& lv = v.bundle();
  const auto& ls = source.bundle();
  const auto& lt = target.bundle();
  for (std::size_t c = 0; c < lt.degrees().size(); ++c) {
    if (lt.degrees()[c] != lv.degrees()[c] + ls.degrees()[c]) {
      throw InvariantViolation("koszul_map: target bundle is not V (x) S");
    }
  }

  // Coordinates of v_i * s_j in the target basis.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rat>>>> products(
      n, std::vector<std::vector<std::pair<std::size_t, Rat>>>(ds));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < ds; ++j) {
      const auto coords = target.coordinates(curves::multiply(lv, v.section(i), ls, source.section(j)));
      for (std::size_t t = 0; t < coords.size(); ++t) {
        if (coords[t] != 0) products[i][j].emplace_back(t, coords[t]);
      }
    }
  }

  std::vector<Triplet> entries;
  std::vector<std::size_t> face(p - 1);
  for (std::size_t w = 0; w < domain.size(); ++w) {
    const auto tuple = domain.at(w);
    for (std::size_t k = 0; k < p; ++k) {
      // (-1)^i with i = k + 1
      const int sign = (k % 2 == 0) ? -1 : 1;
      for (std::size_t a = 0, b = 0; a < p; ++a) {
        if (a != k) face[b++] = tuple[a];
      }
      const std::size_t row_base = codomain.index_of(face) * dt;
      for (std::size_t j = 0; j < ds; ++j) {
        const std::size_t col = w * ds + j;
        for (const auto& [t, value] : products[tuple[k]][j]) {
          entries.push_back({row_base + t, col, sign > 0 ? value : Rat(-value)});
        }
      }
    }
  }
  return RatMatrix(codomain.size() * dt, domain.size() * ds, std::move(entries));
}

KoszulComplex::KoszulComplex(LineBundle l, std::optional<LineBundle> twist, int max_q)
    : sections_(curves::h0_basis(l)), max_q_(max_q) {
  if (sections_.dimension() == 0) throw ModelError("line bundle has no global sections");
  const LineBundle base = twist ? *twist : LineBundle::trivial(l.curve_ptr());
  if (!base.same_curve(l)) throw ModelError("coefficient bundle lives on another curve");
  for (int q = -1; q <= max_q + 1; ++q) {
    coefficients_.push_back(curves::h0_basis(base.tensor(l.power(q))));
  }
}

const SectionBasis& KoszulComplex::coefficients(int q) const {
  if (q < -1 || q > max_q_ + 1) throw std::out_of_range("coefficient degree outside the complex");
  return coefficients_[static_cast<std::size_t>(q + 1)];
}

std::size_t KoszulComplex::space_dimension(std::size_t p, int q) const {
  return static_cast<std::size_t>(linalg::binomial(static_cast<std::int64_t>(r() + 1),
                                                   static_cast<std::int64_t>(p))) *
         coefficients(q).dimension();
}

RatMatrix KoszulComplex::differential(std::size_t p, int q) const {
  return koszul_map(sections_, p, coefficients(q), coefficients(q + 1));
}

std::size_t KoszulComplex::differential_rank(std::size_t p, int q) const {
  if (p == 0 || p > r() + 1 || space_dimension(p, q) == 0) return 0;
  return linalg::rank(differential(p, q));
}

KoszulCell KoszulComplex::cell(std::size_t p, int q) const {
  if (q < 0 || q > max_q_) throw std::out_of_range("Koszul cell outside the computed rows");
  KoszulCell c;
  c.p = p;
  c.q = q;
  c.dimension = space_dimension(p, q);
  c.rank_out = differential_rank(p, q);
  c.rank_in = differential_rank(p + 1, q - 1);
  c.k = c.dimension - c.rank_out - c.rank_in;
  return c;
}

RatMatrix koszul_differential(std::size_t p, int q, const LineBundle& l,
                              const std::optional<LineBundle>& twist) {
  const KoszulComplex complex(l, twist, std::max(q, 0));
  return complex.differential(p, q);
}

std::size_t kernel_bundle_h0(const SectionBasis& a_sections, std::size_t k, const SectionBasis& b) {
  const auto target = curves::h0_basis(a_sections.bundle().tensor(b.bundle()));
  const auto dim = static_cast<std::size_t>(linalg::binomial(
                       static_cast<std::int64_t>(a_sections.dimension()), static_cast<std::int64_t>(k))) *
                   b.dimension();
  if (dim == 0 || k == 0) return dim;
  return dim - linalg::rank(koszul_map(a_sections, k, b, target));
}

std::size_t twisted_k00(const LineBundle& l, const LineBundle& omega, std::size_t p) {
  const KoszulComplex complex(l, omega, 0);
  if (p > complex.r()) throw std::out_of_range("twisted_k00 needs p <= r");
  return complex.cell(complex.r() - p, 0).k;
}

std::size_t twisted_k00(const LineBundle& l, std::size_t p) {
  return twisted_k00(l, curves::dualizing_bundle(l.curve_ptr()), p);
}

}  // namespace koszul::engine
