#include "koszul/linalg/wedge.hpp"

#include <stdexcept>

#include "koszul/linalg/elimination.hpp"

namespace koszul::linalg {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

WedgeBasis::WedgeBasis(std::size_t ambient_dim, std::size_t degree)
    : ambient_dim_(ambient_dim),
      degree_(degree),
      size_(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(ambient_dim),
                                              static_cast<std::int64_t>(degree)))) {
  flat_.reserve(size_ * degree_);
  if (size_ == 0) return;
  std::vector<std::size_t> tuple(degree_);
  for (std::size_t i = 0; i < degree_; ++i) tuple[i] = i;
  while (true) {
    flat_.insert(flat_.end(), tuple.begin(), tuple.end());
    std::size_t i = degree_;
    while (i > 0 && tuple[i - 1] == ambient_dim_ - degree_ + i - 1) --i;
    if (i == 0) break;
    ++tuple[i - 1];
    for (std::size_t j = i; j < degree_; ++j) tuple[j] = tuple[j - 1] + 1;
  }
}

std::span<const std::size_t> WedgeBasis::at(std::size_t index) const {
  return std::span<const std::size_t>(flat_).subspan(index * degree_, degree_);
}

std::size_t WedgeBasis::index_of(std::span<const std::size_t> tuple) const {
  // Count the tuples that precede `tuple` lexicographically.
  std::size_t index = 0;
  std::size_t next = 0;
  const auto n = static_cast<std::int64_t>(ambient_dim_);
  const auto p = static_cast<std::int64_t>(degree_);
  for (std::int64_t i = 0; i < p; ++i) {
    for (std::size_t x = next; x < tuple[static_cast<std::size_t>(i)]; ++x) {
      index += binomial(n - 1 - static_cast<std::int64_t>(x), p - i - 1);
    }
    next = tuple[static_cast<std::size_t>(i)] + 1;
  }
  return index;
}

std::vector<WedgeIndex> enumerate_wedges(std::size_t ambient_dim, std::size_t degree) {
  WedgeBasis basis(ambient_dim, degree);
  std::vector<WedgeIndex> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto t = basis.at(i);
    out.push_back({ambient_dim, {t.begin(), t.end()}});
  }
  return out;
}

RatMatrix wedge_map_matrix(const RatMatrix& base, std::size_t p) {
  if (p > std::min(base.rows(), base.cols())) {
    throw std::out_of_range("exterior power degree exceeds matrix dimensions");
  }
  if (p == 1) return base;
  const WedgeBasis rows(base.rows(), p);
  const WedgeBasis cols(base.cols(), p);
  const auto dense = base.to_dense();
  std::vector<Triplet> entries;
  std::vector<RatVector> minor(p, RatVector(p));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto I = rows.at(i);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto J = cols.at(j);
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = 0; b < p; ++b) minor[a][b] = dense[I[a]][J[b]];
      }
      Rat det = determinant(minor);
      if (det != 0) entries.push_back({i, j, std::move(det)});
    }
  }
  return RatMatrix(rows.size(), cols.size(), std::move(entries));
}

}  // namespace koszul::linalg
