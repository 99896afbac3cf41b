#include "liecp/lie_algebra.hpp"

#include <sstream>

namespace liecp {

LieAlgebra::LieAlgebra(int dim) : dim_(dim) {
  if (dim <= 0) throw error("LieAlgebra: dimension must be positive");
  c_.assign(dim, std::vector<Vec>(dim, zero_vec(dim)));
}

LieAlgebra LieAlgebra::from_structure_equations(int dim, const std::vector<StructureEq>& eqs) {
  LieAlgebra L(dim);
  for (const auto& eq : eqs) {
    if (eq.target < 0 || eq.target >= dim)
      throw error("structure equation: target index out of range");
    for (const auto& t : eq.terms) {
      if (t.i < 0 || t.i >= dim || t.j < 0 || t.j >= dim)
        throw error("structure equation: index out of range");
      if (t.i >= t.j)
        throw error("structure equation: term indices must satisfy i < j");
      // d(e^m)(e_i, e_j) = coeff means [e_i, e_j] gets -coeff * e_m.
      Vec v = L.basis_bracket(t.i, t.j);
      v[eq.target] -= t.coeff;
      L.set_basis_bracket(t.i, t.j, std::move(v));
    }
  }
  return L;
}

const Vec& LieAlgebra::basis_bracket(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw error("basis_bracket: index out of range");
  return c_[i][j];
}

void LieAlgebra::set_basis_bracket(int i, int j, Vec v) {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || static_cast<int>(v.size()) != dim_)
    throw error("set_basis_bracket: bad indices or vector size");
  if (i == j) {
    if (!is_zero(v)) throw error("set_basis_bracket: [e_i, e_i] must vanish");
    return;
  }
  c_[j][i] = scale(Rational(-1), v);
  c_[i][j] = std::move(v);
}

LieAlgebra LieAlgebra::with_structure_constant(int i, int j, int k, const Rational& value) const {
  LieAlgebra L = *this;
  Vec v = L.basis_bracket(i, j);
  if (k < 0 || k >= dim_) throw error("with_structure_constant: index out of range");
  v[k] = value;
  L.set_basis_bracket(i, j, std::move(v));
  return L;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw error("bracket: dimension mismatch");
  Vec r = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational f = x[i] * y[j];
      const Vec& cij = c_[i][j];
      for (int k = 0; k < dim_; ++k)
        if (!cij[k].is_zero()) r[k] += f * cij[k];
    }
  }
  return r;
}

bool LieAlgebra::is_abelian() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!is_zero(c_[i][j])) return false;
  return true;
}

std::vector<StructureEq> LieAlgebra::structure_equations() const {
  // d(e^m)(e_i, e_j) = -c[i][j][m]
  std::vector<StructureEq> eqs;
  for (int m = 0; m < dim_; ++m) {
    StructureEq eq{m, {}};
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j) {
        const Rational v = -c_[i][j][m];
        if (!v.is_zero()) eq.terms.push_back({i, j, v});
      }
    if (!eq.terms.empty()) eqs.push_back(std::move(eq));
  }
  return eqs;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra s(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      Vec v = zero_vec(s.dim());
      const Vec& w = a.basis_bracket(i, j);
      for (int k = 0; k < a.dim(); ++k) v[k] = w[k];
      s.set_basis_bracket(i, j, std::move(v));
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      Vec v = zero_vec(s.dim());
      const Vec& w = b.basis_bracket(i, j);
      for (int k = 0; k < b.dim(); ++k) v[a.dim() + k] = w[k];
      s.set_basis_bracket(a.dim() + i, a.dim() + j, std::move(v));
    }
  return s;
}

VerificationReport jacobi_check(const LieAlgebra& L) {
  VerificationReport report{"jacobi", {}};
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec jac = L.bracket(L.basis_bracket(i, j), basis_vec(n, k));
        jac = add(jac, L.bracket(L.basis_bracket(j, k), basis_vec(n, i)));
        jac = add(jac, L.bracket(L.basis_bracket(k, i), basis_vec(n, j)));
        if (!is_zero(jac))
          report.fail("jacobi", {i + 1, j + 1, k + 1}, std::move(jac));
      }
  return report;
}

}  // namespace liecp
