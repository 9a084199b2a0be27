#include "koszul/linalg/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul::linalg {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
    : rows_(rows), cols_(cols), data_(rows) {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw std::out_of_range("matrix entry outside declared dimensions");
    }
    auto& row = data_[t.row];
    if (!row.empty() && row.back().col == t.col) {
      row.back().value += t.value;
      if (row.back().value == 0) row.pop_back();
    } else if (t.value != 0) {
      row.push_back({t.col, std::move(t.value)});
    }
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Rat(1)});
  return m;
}

RatMatrix RatMatrix::from_dense(const std::vector<RatVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) m.data_[r].push_back({c, rows[r][c]});
    }
  }
  return m;
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

Rat RatMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const RowEntry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rat(0);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  }
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RatMatrix out(rows_, rhs.cols_);
  std::vector<Rat> acc(rhs.cols_);
  std::vector<char> touched(rhs.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < rows_; ++r) {
    cols.clear();
    for (const auto& a : data_[r]) {
      for (const auto& b : rhs.data_[a.col]) {
        if (!touched[b.col]) {
          touched[b.col] = 1;
          acc[b.col] = 0;
          cols.push_back(b.col);
        }
        acc[b.col] += a.value * b.value;
      }
    }
    std::sort(cols.begin(), cols.end());
    for (auto c : cols) {
      touched[c] = 0;
      if (acc[c] != 0) out.data_[r].push_back({c, acc[c]});
    }
  }
  return out;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r] += e.value * v[e.col];
  }
  return out;
}

std::vector<RatVector> RatMatrix::to_dense() const {
  std::vector<RatVector> dense(rows_, RatVector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) dense[r][e.col] = e.value;
  }
  return dense;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].col != y[i].col || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

}  // namespace koszul::linalg
