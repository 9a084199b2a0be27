#pragma once

#include <cstddef>
#include <vector>

#include "koszul/linalg/matrix.hpp"

namespace koszul::linalg {

/// Exact rank over Q. Fraction-free sparse elimination on integer rows with
/// content removal; pivots are taken in row order, leading column first, so
/// every run performs the same operations.
std::size_t rank(const RatMatrix& m);

/// Basis of ker(m), one vector per free column of the reduced row echelon
/// form. Vector for free column f has a 1 in position f and 0 in every other
/// free position. Length is cols - rank(m).
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Reduced row echelon form over Q with unit pivots.
struct ReducedEchelon {
  std::vector<RatVector> rows;        // dense, one per pivot
  std::vector<std::size_t> pivots;    // strictly increasing pivot columns
};

ReducedEchelon reduced_echelon(const RatMatrix& m);

/// Determinant of a square dense matrix (Gaussian elimination over Q).
Rat determinant(std::vector<RatVector> square);

}  // namespace koszul::linalg
