#include "koszul/linalg/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace koszul::linalg {

namespace {

struct IntEntry {
  std::size_t col;
  BigInt value;
};
using IntRow = std::vector<IntEntry>;

void remove_content(IntRow& row) {
  if (row.empty()) return;
  BigInt g = abs(row.front().value);
  for (std::size_t i = 1; i < row.size() && g != 1; ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].value.get_mpz_t());
  }
  if (row.front().value < 0) g = -g;
  if (g != 1) {
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
  }
}

IntRow to_integer_row(std::span<const RowEntry> row) {
  BigInt lcm = 1;
  for (const auto& e : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.get_den_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& e : row) {
    BigInt v = lcm / e.value.get_den();
    v *= e.value.get_num();
    out.push_back({e.col, std::move(v)});
  }
  remove_content(out);
  return out;
}

// a*x - b*y, sparse merge.
IntRow combine(const BigInt& a, const IntRow& x, const BigInt& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  BigInt tmp;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
      out.push_back({x[i].col, a * x[i].value});
      ++i;
    } else if (i == x.size() || y[j].col < x[i].col) {
      out.push_back({y[j].col, -(b * y[j].value)});
      ++j;
    } else {
      tmp = a * x[i].value;
      mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), y[j].value.get_mpz_t());
      if (tmp != 0) out.push_back({x[i].col, tmp});
      ++i;
      ++j;
    }
  }
  return out;
}

// Eliminates the entry of `row` at the pivot column of `pivot`.
void eliminate(IntRow& row, const IntRow& pivot, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const IntEntry& e, std::size_t c) { return e.col < c; });
  if (it == row.end() || it->col != col) return;
  const BigInt& lead = pivot.front().value;
  BigInt g = gcd(lead, it->value);
  BigInt a = lead / g;
  BigInt b = it->value / g;
  row = combine(a, row, b, pivot);
  remove_content(row);
}

// Semi-echelon form: pivot rows with pairwise distinct leading columns,
// inserted in matrix row order.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : pivot_of_col_(cols, -1) {}

  // Returns true when the row was independent of the current pivots.
  bool insert(IntRow row) {
    while (!row.empty()) {
      const auto idx = pivot_of_col_[row.front().col];
      if (idx < 0) break;
      eliminate(row, rows_[static_cast<std::size_t>(idx)], row.front().col);
    }
    if (row.empty()) return false;
    pivot_of_col_[row.front().col] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  // Back substitution; returns rows sorted by pivot column with zeros above
  // and below every pivot.
  std::vector<IntRow> reduce() && {
    std::sort(rows_.begin(), rows_.end(),
              [](const IntRow& a, const IntRow& b) { return a.front().col < b.front().col; });
    for (std::size_t i = rows_.size(); i-- > 0;) {
      const std::size_t col = rows_[i].front().col;
      for (std::size_t j = 0; j < i; ++j) eliminate(rows_[j], rows_[i], col);
    }
    return std::move(rows_);
  }

 private:
  std::vector<long> pivot_of_col_;
  std::vector<IntRow> rows_;
};

}  // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.rows() > m.cols()) return rank(m.transpose());
  Echelon echelon(m.cols());
  const std::size_t bound = std::min(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows() && echelon.rank() < bound; ++r) {
    if (m.row(r).empty()) continue;
    echelon.insert(to_integer_row(m.row(r)));
  }
  return echelon.rank();
}

ReducedEchelon reduced_echelon(const RatMatrix& m) {
  Echelon echelon(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).empty()) continue;
    echelon.insert(to_integer_row(m.row(r)));
  }
  ReducedEchelon out;
  for (auto& row : std::move(echelon).reduce()) {
    RatVector dense(m.cols());
    const BigInt lead = row.front().value;
    for (auto& e : row) dense[e.col] = Rat(e.value, lead);
    for (auto& v : dense) v.canonicalize();
    out.pivots.push_back(row.front().col);
    out.rows.push_back(std::move(dense));
  }
  return out;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const auto rref = reduced_echelon(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : rref.pivots) is_pivot[p] = 1;
  std::vector<RatVector> basis;
  basis.reserve(m.cols() - rref.pivots.size());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < rref.pivots.size(); ++k) v[rref.pivots[k]] = -rref.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rat determinant(std::vector<RatVector> a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rat f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace koszul::linalg
