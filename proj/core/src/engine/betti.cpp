#include "koszul/engine/betti.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "koszul/curves/serialization.hpp"
#include "koszul/error.hpp"
#include "koszul/linalg/wedge.hpp"

namespace koszul::engine {

namespace {

long signed_binomial(long n, long k) {
  return static_cast<long>(linalg::binomial(n, k));
}

}  // namespace

BettiTable betti_table(const LineBundle& l, unsigned jobs) {
  return betti_table(KoszulComplex(l), jobs);
}

BettiTable betti_table(const KoszulComplex& complex, unsigned jobs) {
  if (!curves::is_globally_generated(complex.sections())) {
    throw ModelError("bundle not base point free");
  }
  const std::size_t r = complex.r();

  // Every differential a cell needs, computed once.
  std::vector<std::pair<std::size_t, int>> tasks;
  for (int q = -1; q < BettiTable::kRows; ++q) {
    for (std::size_t p = 0; p <= r + 1; ++p) tasks.emplace_back(p, q);
  }
  std::vector<std::size_t> ranks(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      ranks[i] = complex.differential_rank(tasks[i].first, tasks[i].second);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  auto rank_of = [&](std::size_t p, int q) -> std::size_t {
    if (p > r + 1) return 0;
    return ranks[static_cast<std::size_t>(q + 1) * (r + 2) + p];
  };

  BettiTable table;
  table.r = r;
  table.g = complex.bundle().curve().arithmetic_genus();
  table.d = complex.bundle().total_degree();
  table.curve_hash = curves::model_hash(complex.bundle());
  table.seed = complex.bundle().curve().seed();
  for (int q = 0; q < BettiTable::kRows; ++q) {
    for (std::size_t p = 0; p <= r; ++p) {
      KoszulCell c;
      c.p = p;
      c.q = q;
      c.dimension = complex.space_dimension(p, q);
      c.rank_out = rank_of(p, q);
      c.rank_in = rank_of(p + 1, q - 1);
      if (c.rank_in + c.rank_out > c.dimension) {
        throw InvariantViolation("Koszul ranks exceed the space dimension");
      }
      c.k = c.dimension - c.rank_out - c.rank_in;
      table.cells.push_back(c);
    }
  }
  return table;
}

nlohmann::json betti_to_json(const BettiTable& table) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : table.cells) {
    cells.push_back({{"p", c.p}, {"q", c.q}, {"k", c.k}, {"rank_in", c.rank_in}, {"rank_out", c.rank_out}});
  }
  return {{"r", table.r},
          {"g", table.g},
          {"d", table.d},
          {"cells", std::move(cells)},
          {"curve_hash", curves::hash_hex(table.curve_hash)},
          {"seed", table.seed}};
}

long chi_expected(long g, long r, long d, long p) {
  return signed_binomial(r + 1, p) * (g - d + r) - signed_binomial(r + 1, p + 1) * g +
         signed_binomial(r - 1, p) * d + signed_binomial(r, p + 1) * (g - 1);
}

TableShape table_shape(const BettiTable& table, const KoszulComplex& complex) {
  TableShape shape;
  const auto r = static_cast<long>(table.r);
  shape.h1 = table.g - table.d + r;
  shape.rho = table.g - (r + 1) * shape.h1;

  shape.bottom_row = table.k(0, 0) == 1;
  for (std::size_t p = 1; p <= table.r; ++p) shape.bottom_row = shape.bottom_row && table.k(p, 0) == 0;

  shape.top_row = true;
  for (std::size_t p = 0; p <= table.r; ++p) {
    const std::size_t expected = (r >= 1 && static_cast<long>(p) == r - 1)
                                     ? static_cast<std::size_t>(std::max(shape.h1, 0L))
                                     : 0;
    shape.top_row = shape.top_row && table.k(p, 3) == expected;
  }

  shape.nonspecial_powers = true;
  for (int j = 2; j <= 3; ++j) {
    shape.nonspecial_powers = shape.nonspecial_powers &&
                              static_cast<long>(complex.coefficients(j).dimension()) ==
                                  j * table.d - table.g + 1;
  }
  if (table.r >= 1) shape.k_r_minus_1_2 = table.k(table.r - 1, 2);
  return shape;
}

StrandEuler strand_euler(const KoszulComplex& complex, std::size_t p) {
  if (complex.max_q() < static_cast<int>(p) + 1) {
    throw std::out_of_range("strand_euler needs coefficient spaces up to L^(p+2)");
  }
  StrandEuler e;
  for (int j = 0; j <= static_cast<int>(p) + 1; ++j) {
    const std::size_t wedge = p + 1 - static_cast<std::size_t>(j);
    const long sign = j % 2 == 0 ? 1 : -1;
    const auto c = complex.cell(wedge, j);
    e.from_dimensions += sign * static_cast<long>(c.dimension);
    e.from_cohomology += sign * static_cast<long>(c.k);
    if (j == 0) e.from_dimensions -= static_cast<long>(c.rank_in);
  }
  return e;
}

}  // namespace koszul::engine
