#pragma once

#include "hvlie/rational.hpp"

#include <cstddef>
#include <vector>

namespace hvlie {

/// Dense exact matrix. Small systems only; everything here is O(n^3)
/// fraction arithmetic with no pivot-size heuristics needed.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<Rational>> a;

  static Matrix zero(std::size_t rows, std::size_t cols) {
    return {rows, cols, std::vector<std::vector<Rational>>(rows, std::vector<Rational>(cols))};
  }

  Rational& at(std::size_t r, std::size_t c) { return a[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r][c]; }
};

/// Reduce to reduced row echelon form in place and return the rank. The
/// RREF of a matrix is unique, so the result does not depend on row order;
/// pivoting picks the first nonzero candidate.
std::size_t rref_in_place(Matrix& m);

std::size_t rank(Matrix m);

Matrix transpose(const Matrix& m);

/// Canonical nullspace basis read off the RREF: one vector per free column,
/// with a 1 in that column, ordered by free column index.
std::vector<std::vector<Rational>> nullspace_basis(Matrix m);

}  // namespace hvlie
