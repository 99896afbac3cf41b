#include "liecp/alt_form.hpp"

#include <algorithm>

namespace liecp {

int sort_indices(std::vector<int>& idx) {
  // Insertion sort, counting transpositions. Tuples are tiny.
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    int v = idx[i];
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > v) {
      idx[j] = idx[j - 1];
      --j;
      sign = -sign;
    }
    idx[j] = v;
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

AltForm::AltForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim <= 0) throw error("AltForm: dimension must be positive");
  if (degree < 0) throw error("AltForm: negative degree");
}

void AltForm::add_term(std::vector<int> idx, const Rational& c) {
  if (static_cast<int>(idx.size()) != degree_)
    throw error("AltForm::add_term: tuple size does not match degree");
  for (int i : idx)
    if (i < 0 || i >= dim_) throw error("AltForm::add_term: index out of range");
  if (c.is_zero()) return;
  const int sign = sort_indices(idx);
  if (sign == 0) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(std::move(idx), sign < 0 ? -c : c);
  } else {
    it->second += (sign < 0 ? -c : c);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational AltForm::coeff(const std::vector<int>& sorted_idx) const {
  auto it = terms_.find(sorted_idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational AltForm::eval_basis(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw error("AltForm::eval_basis: tuple size does not match degree");
  std::vector<int> s = idx;
  const int sign = sort_indices(s);
  if (sign == 0) return Rational(0);
  const Rational c = coeff(s);
  return sign < 0 ? -c : c;
}

Rational AltForm::eval(const std::vector<Vec>& xs) const {
  if (static_cast<int>(xs.size()) != degree_)
    throw error("AltForm::eval: argument count does not match degree");
  for (const auto& x : xs)
    if (static_cast<int>(x.size()) != dim_) throw error("AltForm::eval: dimension mismatch");
  if (degree_ == 0) return coeff({});
  Rational total;
  for (const auto& [idx, c] : terms_) {
    // det of the degree x degree minor picked out by idx.
    Matrix minor(degree_, degree_);
    for (int r = 0; r < degree_; ++r)
      for (int col = 0; col < degree_; ++col) minor.at(r, col) = xs[col][idx[r]];
    const Rational d = determinant(std::move(minor));
    if (!d.is_zero()) total += c * d;
  }
  return total;
}

Rational AltForm::pair(const Vec& x) const {
  if (degree_ != 1) throw error("AltForm::pair: not a 1-form");
  return eval({x});
}

AltForm AltForm::operator+(const AltForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw error("AltForm::+: shape mismatch");
  AltForm r = *this;
  for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
  return r;
}

AltForm AltForm::operator-(const AltForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw error("AltForm::-: shape mismatch");
  AltForm r = *this;
  for (const auto& [idx, c] : o.terms_) r.add_term(idx, -c);
  return r;
}

AltForm AltForm::scaled(const Rational& c) const {
  AltForm r(dim_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [idx, v] : terms_) r.terms_.emplace(idx, c * v);
  return r;
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  if (a.dim() != b.dim()) throw error("wedge: dimension mismatch");
  AltForm r(a.dim(), a.degree() + b.degree());
  if (r.degree() > a.dim()) return r;  // beyond top degree everything vanishes
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), ca * cb);
    }
  return r;
}

AltForm form_power(const AltForm& a, int m) {
  if (m < 0) throw error("form_power: negative exponent");
  AltForm r = AltForm::unit(a.dim());
  for (int i = 0; i < m; ++i) r = wedge(r, a);
  return r;
}

}  // namespace liecp
