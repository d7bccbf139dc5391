#include "hvlie/linalg.hpp"

namespace hvlie {

std::size_t rref_in_place(Matrix& m) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t r = pivot_row;
    while (r < m.rows && m.a[r][col] == 0) ++r;
    if (r == m.rows) continue;
    std::swap(m.a[pivot_row], m.a[r]);

    auto& prow = m.a[pivot_row];
    if (prow[col] != 1) {
      Rational inv = 1 / prow[col];
      for (std::size_t c = col; c < m.cols; ++c) {
        if (prow[c] != 0) prow[c] *= inv;
      }
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == pivot_row) continue;
      Rational factor = m.a[i][col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c) {
        if (prow[c] != 0) m.a[i][c] -= factor * prow[c];
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t rank(Matrix m) { return rref_in_place(m); }

Matrix transpose(const Matrix& m) {
  Matrix out = Matrix::zero(m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (m.a[r][c] != 0) out.a[c][r] = m.a[r][c];
    }
  }
  return out;
}

std::vector<std::vector<Rational>> nullspace_basis(Matrix m) {
  std::size_t rank = rref_in_place(m);
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t r = 0, col = 0; r < rank; ++r) {
    while (col < m.cols && m.a[r][col] == 0) ++col;
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
  }

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) {
      if (m.a[r][free] != 0) v[pivot_col_of_row[r]] = -m.a[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hvlie
