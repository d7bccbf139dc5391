#include "hvlie/linalg.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hvlie;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m = Matrix::zero(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      // sparse-ish with small entries; rank deficiency happens naturally
      if (rng.next_int(0, 2) == 0) m.at(r, c) = Rational(rng.next_int(-4, 4));
    }
  }
  return m;
}

std::vector<Rational> mat_apply(const Matrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) out[r] += m.at(r, c) * v[c];
  }
  return out;
}

}  // namespace

TEST_CASE("rref of a worked example") {
  Matrix m = Matrix::zero(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 7;
  CHECK(rref_in_place(m) == 2);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(1, 1) == 0);
  CHECK(m.at(1, 2) == 1);

  auto basis = nullspace_basis(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<Rational>{-2, 1, 0});
}

TEST_CASE("zero and identity-like edges") {
  Matrix z = Matrix::zero(3, 4);
  CHECK(rank(z) == 0);
  auto basis = nullspace_basis(z);
  REQUIRE(basis.size() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(basis[j][k] == (j == k ? 1 : 0));
    }
  }

  Matrix id = Matrix::zero(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = 5;
  CHECK(rank(id) == 3);
  CHECK(nullspace_basis(id).empty());
}

TEST_CASE("rank equals the rank of the transpose") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 1 + rng.next_int(0, 6), 1 + rng.next_int(0, 6));
    CHECK(rank(m) == rank(transpose(m)));
  }
}

TEST_CASE("rref does not depend on row order") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 5, 6);
    Matrix shuffled = m;
    for (std::size_t r = shuffled.rows; r > 1; --r) {
      std::size_t j = static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(r) - 1));
      std::swap(shuffled.a[r - 1], shuffled.a[j]);
    }
    Matrix a = m, b = shuffled;
    rref_in_place(a);
    rref_in_place(b);
    CHECK(a.a == b.a);
  }
}

TEST_CASE("nullspace basis is canonical and annihilated by the matrix") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 4, 7);
    auto basis = nullspace_basis(m);
    CHECK(rank(m) + basis.size() == m.cols);

    // each vector has a 1 in its own free column and 0 in the others
    std::vector<std::size_t> ones;
    for (const auto& v : basis) {
      std::size_t where = m.cols;
      for (std::size_t c = 0; c < m.cols; ++c) {
        if (v[c] == 1) where = c;
      }
      ones.push_back(where);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      REQUIRE(ones[i] < m.cols);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        CHECK(basis[j][ones[i]] == (i == j ? 1 : 0));
      }
      for (const Rational& r : mat_apply(m, basis[i])) CHECK(r == 0);
    }
    CHECK(std::is_sorted(ones.begin(), ones.end()));
  }
}
