#include "liecp/exterior.hpp"

namespace liecp {

namespace {

// Iterates strictly increasing k-tuples in [0, n). Returns false when done.
bool next_tuple(std::vector<int>& t, int n) {
  const int k = static_cast<int>(t.size());
  for (int pos = k - 1; pos >= 0; --pos) {
    if (t[pos] < n - (k - pos)) {
      ++t[pos];
      for (int q = pos + 1; q < k; ++q) t[q] = t[q - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_tuple(int k) {
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  return t;
}

// omega(v, e_{rest...}) for a vector first slot.
Rational eval_vector_first(const AltForm& a, const Vec& v, const std::vector<int>& rest) {
  Rational total;
  std::vector<int> idx(rest.size() + 1);
  std::copy(rest.begin(), rest.end(), idx.begin() + 1);
  for (int m = 0; m < static_cast<int>(v.size()); ++m) {
    if (v[m].is_zero()) continue;
    idx[0] = m;
    const Rational c = a.eval_basis(idx);
    if (!c.is_zero()) total += v[m] * c;
  }
  return total;
}

}  // namespace

AltForm exterior_derivative(const LieAlgebra& L, const AltForm& a) {
  if (a.dim() != L.dim()) throw error("exterior_derivative: dimension mismatch");
  const int n = L.dim();
  const int k = a.degree();
  AltForm d(n, k + 1);
  if (k + 1 > n || a.is_zero()) return d;

  std::vector<int> tuple = first_tuple(k + 1);
  do {
    Rational val;
    std::vector<int> rest(k - 1 < 0 ? 0 : k - 1);
    for (int p = 0; p < k + 1; ++p)
      for (int q = p + 1; q < k + 1; ++q) {
        const Vec& br = L.basis_bracket(tuple[p], tuple[q]);
        if (is_zero(br)) continue;
        rest.clear();
        for (int r = 0; r < k + 1; ++r)
          if (r != p && r != q) rest.push_back(tuple[r]);
        const Rational c = eval_vector_first(a, br, rest);
        if (c.is_zero()) continue;
        val += ((p + q) % 2 == 0 ? c : -c);
      }
    if (!val.is_zero()) d.add_term(tuple, val);
  } while (next_tuple(tuple, n));
  return d;
}

AltForm interior_product(const Vec& x, const AltForm& a) {
  if (static_cast<int>(x.size()) != a.dim()) throw error("interior_product: dimension mismatch");
  if (a.degree() == 0) throw error("interior_product: degree-0 form");
  AltForm r(a.dim(), a.degree() - 1);
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      if (x[idx[pos]].is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t q = 0; q < idx.size(); ++q)
        if (q != pos) rest.push_back(idx[q]);
      const Rational v = x[idx[pos]] * c;
      r.add_term(std::move(rest), pos % 2 == 0 ? v : -v);
    }
  }
  return r;
}

AltForm lie_derivative(const LieAlgebra& L, const Vec& x, const AltForm& a) {
  AltForm result = interior_product(x, exterior_derivative(L, a));
  if (a.degree() > 0)
    result = result + exterior_derivative(L, interior_product(x, a));
  return result;
}

Endo lie_derivative(const LieAlgebra& L, const Vec& x, const Endo& f) {
  const int n = L.dim();
  if (f.rows() != n || f.cols() != n || static_cast<int>(x.size()) != n)
    throw error("lie_derivative: dimension mismatch");
  Endo r(n, n);
  for (int j = 0; j < n; ++j) {
    const Vec ej = basis_vec(n, j);
    const Vec col = sub(L.bracket(x, f.column(j)), f.apply(L.bracket(x, ej)));
    for (int i = 0; i < n; ++i) r.at(i, j) = col[i];
  }
  return r;
}

void VecValued2Form::set(int i, int j, Vec v) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || i == j)
    throw error("VecValued2Form::set: bad pair");
  if (i > j) {
    std::swap(i, j);
    v = scale(Rational(-1), v);
  }
  if (liecp::is_zero(v))
    vals_.erase({i, j});
  else
    vals_[{i, j}] = std::move(v);
}

Vec VecValued2Form::value(int i, int j) const {
  if (i == j) return zero_vec(dim_);
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = vals_.find({i, j});
  if (it == vals_.end()) return zero_vec(dim_);
  return flip ? scale(Rational(-1), it->second) : it->second;
}

Vec VecValued2Form::eval(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw error("VecValued2Form::eval: dimension mismatch");
  Vec r = zero_vec(dim_);
  for (const auto& [ij, v] : vals_) {
    const auto [i, j] = ij;
    const Rational f = x[i] * y[j] - x[j] * y[i];
    if (!f.is_zero()) r = add(r, scale(f, v));
  }
  return r;
}

std::optional<std::pair<std::pair<int, int>, Vec>> VecValued2Form::first_nonzero() const {
  if (vals_.empty()) return std::nullopt;
  return *vals_.begin();
}

VecValued2Form nijenhuis(const LieAlgebra& L, const Endo& f) {
  const int n = L.dim();
  if (f.rows() != n || f.cols() != n) throw error("nijenhuis: dimension mismatch");
  const Endo f2 = f.multiply(f);
  VecValued2Form t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec ei = basis_vec(n, i), ej = basis_vec(n, j);
      const Vec fi = f.column(i), fj = f.column(j);
      Vec v = f2.apply(L.basis_bracket(i, j));
      v = add(v, L.bracket(fi, fj));
      v = sub(v, f.apply(L.bracket(fi, ej)));
      v = sub(v, f.apply(L.bracket(ei, fj)));
      if (!is_zero(v)) t.set(i, j, std::move(v));
    }
  return t;
}

VecValued2Form nijenhuis_complex(const LieAlgebra& L, const Endo& j) {
  const int n = L.dim();
  if (j.rows() != n || j.cols() != n) throw error("nijenhuis_complex: dimension mismatch");
  if (!(j.multiply(j) + Matrix::identity(n)).is_zero())
    throw error("nijenhuis_complex: J^2 != -Id");
  VecValued2Form t(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Vec ea = basis_vec(n, a), eb = basis_vec(n, b);
      const Vec ja = j.column(a), jb = j.column(b);
      Vec v = L.bracket(ja, jb);
      v = sub(v, j.apply(L.bracket(ja, eb)));
      v = sub(v, j.apply(L.bracket(ea, jb)));
      v = sub(v, L.basis_bracket(a, b));
      if (!is_zero(v)) t.set(a, b, std::move(v));
    }
  return t;
}

}  // namespace liecp
