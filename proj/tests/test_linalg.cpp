#include <doctest.h>

#include "liecp/pairs.hpp"

using namespace liecp;

namespace {

// Plain rational row reduction, used as an independent rank oracle for the
// fraction-free path.
int naive_rank(Matrix m) {
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(r, c), m.at(piv, c));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      const Rational f = m.at(i, col) / m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(i, c) -= f * m.at(r, c);
    }
    ++r;
  }
  return r;
}

Matrix random_matrix(Rng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rng.rational(4, 3);
  return m;
}

}  // namespace

TEST_CASE("solve_unique on a known system") {
  Matrix a(2, 2);
  a.at(0, 0) = Rational(2); a.at(0, 1) = Rational(1);
  a.at(1, 0) = Rational(1); a.at(1, 1) = Rational(3);
  const Vec x = solve_unique(a, {Rational(5), Rational(10)});
  CHECK(x == Vec{Rational(1), Rational(3)});
}

TEST_CASE("solve_unique failure modes") {
  Matrix a(2, 2);
  a.at(0, 0) = Rational(1); a.at(0, 1) = Rational(2);
  a.at(1, 0) = Rational(2); a.at(1, 1) = Rational(4);
  std::string reason;
  CHECK(!try_solve_unique(a, {Rational(1), Rational(3)}, &reason));  // inconsistent
  CHECK(reason == "inconsistent system");
  CHECK(!try_solve_unique(a, {Rational(1), Rational(2)}, &reason));  // underdetermined
  CHECK(reason == "singular system (solution not unique)");
  CHECK_THROWS_AS(solve_unique(a, {Rational(1), Rational(3)}), error);
}

TEST_CASE("kernel vectors satisfy the system") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = random_matrix(rng, rng.int_in(1, 5), rng.int_in(1, 6));
    const auto kb = kernel_basis(m);
    CHECK(static_cast<int>(kb.size()) == m.cols() - rank(m));
    for (const Vec& v : kb) CHECK(is_zero(m.apply(v)));
    // kernel basis is linearly independent
    if (!kb.empty())
      CHECK(rank(Matrix::from_columns(kb)) == static_cast<int>(kb.size()));
  }
}

TEST_CASE("fraction-free rank agrees with plain elimination") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = random_matrix(rng, rng.int_in(1, 6), rng.int_in(1, 6));
    CHECK(rank(m) == naive_rank(m));
  }
}

TEST_CASE("inverse round-trip") {
  Rng rng(13);
  int done = 0;
  while (done < 10) {
    const Matrix m = random_matrix(rng, 4, 4);
    if (rank(m) < 4) continue;
    CHECK(m.multiply(inverse(m)) == Matrix::identity(4));
    ++done;
  }
  CHECK_THROWS_AS(inverse(Matrix(3, 3)), error);
}

TEST_CASE("in_span") {
  const Vec e1 = basis_vec(3, 0), e2 = basis_vec(3, 1), e3 = basis_vec(3, 2);
  CHECK(in_span({e1, e2}, add(e1, scale(Rational(7, 3), e2))));
  CHECK(!in_span({e1, e2}, e3));
  CHECK(in_span({}, zero_vec(3)));
  CHECK(in_span({e1}, zero_vec(3)));
}

TEST_CASE("determinant") {
  Matrix m(3, 3);
  m.at(0, 0) = Rational(2); m.at(0, 1) = Rational(0); m.at(0, 2) = Rational(1);
  m.at(1, 0) = Rational(1); m.at(1, 1) = Rational(1); m.at(1, 2) = Rational(0);
  m.at(2, 0) = Rational(0); m.at(2, 1) = Rational(3); m.at(2, 2) = Rational(1);
  CHECK(determinant(m) == Rational(5));
  CHECK(determinant(Matrix(2, 2)) == Rational(0));
}
