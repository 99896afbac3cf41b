#pragma once

#include <vector>

#include "liecp/linalg.hpp"
#include "liecp/report.hpp"

namespace liecp {

/// One summand of a structure equation: d(e^target) contains
/// coeff * e^i ∧ e^j. Indices are 0-based here; the file format is 1-based.
struct StructureTerm {
  int i, j;
  Rational coeff;
};

struct StructureEq {
  int target;
  std::vector<StructureTerm> terms;
};

/// Finite-dimensional Lie algebra over the rationals, given by structure
/// constants on a fixed basis: [e_i, e_j] = sum_k c[i][j][k] e_k.
/// Antisymmetry is maintained by construction; the Jacobi identity is a
/// separate check (jacobi_check).
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim);

  /// Builds the algebra dual to structure equations d(e^m) = sum c e^i ∧ e^j,
  /// under the convention d(omega)(X, Y) = -omega([X, Y]): each term adds
  /// -coeff * e_target to [e_i, e_j].
  static LieAlgebra from_structure_equations(int dim, const std::vector<StructureEq>& eqs);

  int dim() const { return dim_; }

  const Vec& basis_bracket(int i, int j) const;
  void set_basis_bracket(int i, int j, Vec v);

  /// Copy with c[i][j][k] (and the antisymmetric mirror) replaced.
  LieAlgebra with_structure_constant(int i, int j, int k, const Rational& value) const;

  /// Bilinear extension of the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;

  bool is_abelian() const;
  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && c_ == o.c_; }

  /// The structure equations recovered from the brackets, one entry per basis
  /// covector with a nonzero differential. Used for round-trips and files.
  std::vector<StructureEq> structure_equations() const;

 private:
  int dim_;
  std::vector<std::vector<Vec>> c_;  // c_[i][j] = [e_i, e_j]
};

/// Direct sum: block brackets, no interaction between summands.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Checks the Jacobi identity on every basis triple. A failing report carries
/// the first bad triple (1-based) and the residual Jacobiator vector.
VerificationReport jacobi_check(const LieAlgebra& L);

}  // namespace liecp
