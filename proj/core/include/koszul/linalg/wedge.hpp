#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "koszul/linalg/matrix.hpp"

namespace koszul::linalg {

std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Index of a basis vector e_{i_1} ^ ... ^ e_{i_p} of the p-th exterior power
/// of an ambient_dim-dimensional space. The tuple is strictly increasing.
struct WedgeIndex {
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> tuple;

  std::size_t degree() const { return tuple.size(); }
};

/// The C(n, p) wedge basis tuples of Lambda^p of an n-dimensional space, in
/// lexicographic order, with O(p) ranking.
class WedgeBasis {
 public:
  WedgeBasis(std::size_t ambient_dim, std::size_t degree);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return size_; }

  /// Tuple at a lexicographic position.
  std::span<const std::size_t> at(std::size_t index) const;
  /// Lexicographic position of a strictly increasing tuple.
  std::size_t index_of(std::span<const std::size_t> tuple) const;

 private:
  std::size_t ambient_dim_;
  std::size_t degree_;
  std::size_t size_;
  std::vector<std::size_t> flat_;
};

std::vector<WedgeIndex> enumerate_wedges(std::size_t ambient_dim, std::size_t degree);

/// Matrix of Lambda^p(base) in lexicographic wedge bases: entry (I, J) is the
/// minor of base on rows I and columns J. p = 0 gives the 1x1 identity.
/// Throws std::out_of_range when p > min(rows, cols).
RatMatrix wedge_map_matrix(const RatMatrix& base, std::size_t p);

}  // namespace koszul::linalg
