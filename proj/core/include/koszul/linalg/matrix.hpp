#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "koszul/linalg/rational.hpp"

namespace koszul::linalg {

using RatVector = std::vector<Rat>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rat value;
};

/// One stored entry of a sparse row.
struct RowEntry {
  std::size_t col;
  Rat value;
};

/// Sparse rational matrix, row-major. Immutable after construction; no zero
/// entries are stored.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  /// Duplicate (row, col) pairs are summed; entries summing to zero are dropped.
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_dense(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  std::span<const RowEntry> row(std::size_t r) const { return data_[r]; }
  Rat at(std::size_t r, std::size_t c) const;

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVector operator*(const RatVector& v) const;
  std::vector<RatVector> to_dense() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<RowEntry>> data_;
};

}  // namespace koszul::linalg
