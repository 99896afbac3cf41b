#pragma once

#include <map>
#include <vector>

#include "liecp/linalg.hpp"

namespace liecp {

/// Alternating k-form with exact rational coefficients, stored sparsely as a
/// map from strictly increasing 0-based index tuples to nonzero scalars.
/// Evaluation follows the determinant convention:
///   (e^1 ∧ e^2)(e_1, e_2) = 1, no 1/k! factors anywhere.
class AltForm {
 public:
  AltForm() : dim_(0), degree_(0) {}
  AltForm(int dim, int degree);

  static AltForm unit(int dim) {  // the constant 0-form 1
    AltForm f(dim, 0);
    f.add_term({}, Rational(1));
    return f;
  }
  static AltForm covector(int dim, int i) {  // e^i
    AltForm f(dim, 1);
    f.add_term({i}, Rational(1));
    return f;
  }
  static AltForm wedge_pair(int dim, int i, int j) {  // e^i ∧ e^j
    AltForm f(dim, 2);
    f.add_term({i, j}, Rational(1));
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }

  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  /// Adds c * e^{idx}; the tuple may be unsorted, repeated indices make the
  /// contribution vanish. Zero accumulations are erased.
  void add_term(std::vector<int> idx, const Rational& c);

  /// Coefficient at a strictly increasing tuple.
  Rational coeff(const std::vector<int>& sorted_idx) const;

  /// Evaluation on basis vectors e_{idx[0]}, ..., e_{idx[k-1]} (any order).
  Rational eval_basis(const std::vector<int>& idx) const;

  /// Evaluation on arbitrary vectors (alternating multilinear extension).
  Rational eval(const std::vector<Vec>& xs) const;

  /// Pairing of a 1-form with a vector.
  Rational pair(const Vec& x) const;

  AltForm operator+(const AltForm& o) const;
  AltForm operator-(const AltForm& o) const;
  AltForm scaled(const Rational& c) const;
  AltForm operator-() const { return scaled(Rational(-1)); }
  bool operator==(const AltForm& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  int dim_;
  int degree_;
  std::map<std::vector<int>, Rational> terms_;
};

/// Wedge product with shuffle signs (determinant convention).
AltForm wedge(const AltForm& a, const AltForm& b);

/// m-fold wedge power; m = 0 gives the unit 0-form.
AltForm form_power(const AltForm& a, int m);

/// Sorts an index tuple, returning the permutation sign, or 0 on repeats.
/// Helper shared by forms and the exterior calculus.
int sort_indices(std::vector<int>& idx);

}  // namespace liecp
