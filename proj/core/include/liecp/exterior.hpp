#pragma once

#include <map>
#include <optional>
#include <utility>

#include "liecp/alt_form.hpp"
#include "liecp/lie_algebra.hpp"

namespace liecp {

/// Invariant exterior derivative (Chevalley-Eilenberg):
///   d(omega)(X_0,...,X_k) =
///     sum_{i<j} (-1)^{i+j} omega([X_i, X_j], X_0,...,^X_i,...,^X_j,...,X_k).
/// For a 1-form this is d(omega)(X, Y) = -omega([X, Y]). Satisfies d∘d = 0
/// exactly when the Jacobi identity holds.
AltForm exterior_derivative(const LieAlgebra& L, const AltForm& a);

/// Contraction i_X: (i_X a)(Y_1,...,Y_{k-1}) = a(X, Y_1,...). Degree-0 input
/// is an error.
AltForm interior_product(const Vec& x, const AltForm& a);

/// Lie derivative of an invariant form via the Cartan formula
/// L_X = i_X ∘ d + d ∘ i_X (for 0-forms just i_X ∘ d).
AltForm lie_derivative(const LieAlgebra& L, const Vec& x, const AltForm& a);

/// Lie derivative of an endomorphism: (L_X f)(Y) = [X, f Y] - f([X, Y]).
Endo lie_derivative(const LieAlgebra& L, const Vec& x, const Endo& f);

/// Antisymmetric bilinear map with vector values, stored on strictly
/// increasing basis pairs (0-based); zero values are not stored.
class VecValued2Form {
 public:
  explicit VecValued2Form(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool is_zero() const { return vals_.empty(); }

  void set(int i, int j, Vec v);

  /// Value on (e_i, e_j) for any i, j (antisymmetry applied).
  Vec value(int i, int j) const;

  /// Bilinear extension to arbitrary vectors.
  Vec eval(const Vec& x, const Vec& y) const;

  /// First stored pair in lexicographic order, for deterministic witnesses.
  std::optional<std::pair<std::pair<int, int>, Vec>> first_nonzero() const;

  const std::map<std::pair<int, int>, Vec>& entries() const { return vals_; }

  bool operator==(const VecValued2Form& o) const { return dim_ == o.dim_ && vals_ == o.vals_; }

 private:
  int dim_;
  std::map<std::pair<int, int>, Vec> vals_;
};

/// Nijenhuis tensor of an endomorphism:
///   [f, f](X, Y) = f^2 [X, Y] + [f X, f Y] - f [f X, Y] - f [X, f Y].
VecValued2Form nijenhuis(const LieAlgebra& L, const Endo& f);

/// Nijenhuis tensor specialized to an almost complex structure (J^2 = -Id is
/// checked): N(X, Y) = [J X, J Y] - J [J X, Y] - J [X, J Y] - [X, Y].
/// Coincides with nijenhuis(L, J); the two routes cross-check each other.
VecValued2Form nijenhuis_complex(const LieAlgebra& L, const Endo& j);

}  // namespace liecp
