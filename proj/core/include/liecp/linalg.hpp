#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecp/rational.hpp"

namespace liecp {

/// Coordinate vector in the fixed basis of the ambient algebra.
using Vec = std::vector<Rational>;

Vec zero_vec(int dim);
Vec basis_vec(int dim, int i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
std::string vec_str(const Vec& v);

/// Dense matrix of exact rationals. Used both for endomorphisms (column j =
/// image of e_j) and for the linear systems behind Reeb solving, kernels and
/// membership tests.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<Vec>& cols);
  static Matrix from_rows(const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec column(int c) const;
  Vec row(int r) const;

  Vec apply(const Vec& x) const;           // matrix * vector
  Matrix multiply(const Matrix& o) const;  // matrix * matrix

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// An endomorphism of the algebra in the fixed basis; column j is the image
/// of e_j.
using Endo = Matrix;

/// Row echelon form computed by fraction-free (Bareiss) elimination after
/// clearing denominators row by row. Pivoting picks the first nonzero entry,
/// so results are deterministic.
struct Echelon {
  Matrix mat;
  std::vector<int> pivot_cols;  // one per pivot row, increasing
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon echelon_form(Matrix m);
int rank(const Matrix& m);

/// Basis of the right kernel {x : m x = 0}. Deterministic: one vector per
/// free column, in column order, with unit entry at the free position.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Unique solution of m x = b. Fails (with a reason) when the system is
/// inconsistent or underdetermined.
std::optional<Vec> try_solve_unique(const Matrix& m, const Vec& b, std::string* reason = nullptr);
Vec solve_unique(const Matrix& m, const Vec& b);

/// Does v lie in the span of the given vectors?
bool in_span(const std::vector<Vec>& basis, const Vec& v);

/// Exact inverse; throws on singular input.
Matrix inverse(const Matrix& m);

Rational determinant(Matrix m);

}  // namespace liecp
