#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "koszul/engine/koszul_complex.hpp"

namespace koszul::engine {

/// k_{p,q} for p in [0, r] and q in [0, 3].
struct BettiTable {
  std::size_t r = 0;
  long g = 0;  // arithmetic genus of the model
  long d = 0;
  std::vector<KoszulCell> cells;  // q-major: index q * (r + 1) + p
  std::uint64_t curve_hash = 0;
  std::uint64_t seed = 0;

  static constexpr int kRows = 4;

  const KoszulCell& at(std::size_t p, int q) const {
    return cells.at(static_cast<std::size_t>(q) * (r + 1) + p);
  }
  std::size_t k(std::size_t p, int q) const { return at(p, q).k; }
};

/// Throws ModelError("bundle not base point free") when a base point is found.
/// Cells are independent given the shared section bases; `jobs` worker
/// threads compute the differential ranks.
BettiTable betti_table(const LineBundle& l, unsigned jobs = 1);
BettiTable betti_table(const KoszulComplex& complex, unsigned jobs = 1);

/// {r, g, d, cells: [{p, q, k, rank_in, rank_out}], curve_hash, seed}
nlohmann::json betti_to_json(const BettiTable& table);

/// k_{p,1} - k_{p-1,2} for a general pair, valid for 1 <= p <= r:
/// C(r+1,p)(g-d+r) - C(r+1,p+1) g + C(r-1,p) d + C(r,p+1)(g-1).
long chi_expected(long g, long r, long d, long p);

/// Compares a computed table against the shape of the general-pair picture:
/// bottom row (1, 0, ..., 0), k_{r-1,3} = h^1(L) and k_{p,3} = 0 otherwise,
/// h^0(L^j) = jd - g + 1 for j = 2, 3.
struct TableShape {
  bool bottom_row = false;
  bool top_row = false;
  bool nonspecial_powers = false;
  long h1 = 0;
  long rho = 0;
  std::size_t k_r_minus_1_2 = 0;  // reported against rho, never asserted

  bool general_shape() const { return bottom_row && top_row && nonspecial_powers; }
};

TableShape table_shape(const BettiTable& table, const KoszulComplex& complex);

/// Alternating sum of the strand ... -> Lambda^(p+1-j) H^0 (x) H^0(L^j) -> ...
/// for j = 0 .. p + 1, computed twice: from the space dimensions and from the
/// cohomology dimensions. The complex must have max_q >= p + 1.
struct StrandEuler {
  long from_dimensions = 0;
  long from_cohomology = 0;
};
StrandEuler strand_euler(const KoszulComplex& complex, std::size_t p);

}  // namespace koszul::engine
