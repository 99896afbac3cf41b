#include "liecp/linalg.hpp"

#include <sstream>

namespace liecp {

Vec zero_vec(int dim) { return Vec(dim); }

Vec basis_vec(int dim, int i) {
  if (i < 0 || i >= dim) throw error("basis_vec: index out of range");
  Vec v(dim);
  v[i] = Rational(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

static void check_same_dim(const Vec& a, const Vec& b, const char* op) {
  if (a.size() != b.size()) throw error(std::string(op) + ": dimension mismatch");
}

Vec add(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "add");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "sub");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != m.rows())
      throw error("Matrix::from_columns: ragged input");
    for (int r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols())
      throw error("Matrix::from_rows: ragged input");
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw error("Matrix::apply: dimension mismatch");
  Vec y(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rational s;
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) s += at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

Matrix Matrix::multiply(const Matrix& o) const {
  if (cols_ != o.rows_) throw error("Matrix::multiply: dimension mismatch");
  Matrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c)
        if (!o.at(k, c).is_zero()) m.at(r, c) += at(r, k) * o.at(k, c);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("Matrix::+: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("Matrix::-: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Scale a row to integer entries: multiply by the lcm of denominators, then
// divide by the gcd of numerators. Positive scaling preserves the row space.
void make_row_primitive(Matrix& m, int r) {
  mpz_class lcm_den(1), gcd_num(0);
  for (int c = 0; c < m.cols(); ++c) {
    const Rational& x = m.at(r, c);
    if (x.is_zero()) continue;
    mpz_class den(x.denominator()), num(x.numerator());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
  }
  if (gcd_num == 0) return;  // zero row
  // mpz_gcd is nonnegative and the lcm is positive, so f > 0.
  const Rational f = Rational::parse(lcm_den.get_str() + "/" + gcd_num.get_str());
  for (int c = 0; c < m.cols(); ++c) {
    Rational& x = m.at(r, c);
    if (!x.is_zero()) x *= f;
  }
}

}  // namespace

Echelon echelon_form(Matrix m) {
  for (int r = 0; r < m.rows(); ++r) make_row_primitive(m, r);

  Echelon e;
  Rational prev(1);
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(r, c), m.at(piv, c));

    const Rational p = m.at(r, col);
    for (int i = r + 1; i < m.rows(); ++i) {
      const Rational f = m.at(i, col);
      for (int c = col; c < m.cols(); ++c)
        m.at(i, c) = (p * m.at(i, c) - f * m.at(r, c)) / prev;  // Bareiss step: exact
      m.at(i, col) = Rational(0);
    }
    prev = p;
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.mat = std::move(m);
  return e;
}

int rank(const Matrix& m) { return echelon_form(m).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  const Echelon e = echelon_form(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int pc : e.pivot_cols) is_pivot[pc] = true;

  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n);
    x[f] = Rational(1);
    for (int row = e.rank() - 1; row >= 0; --row) {
      const int pc = e.pivot_cols[row];
      Rational s;
      for (int c = pc + 1; c < n; ++c)
        if (!e.mat.at(row, c).is_zero() && !x[c].is_zero()) s += e.mat.at(row, c) * x[c];
      x[pc] = -s / e.mat.at(row, pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> try_solve_unique(const Matrix& m, const Vec& b, std::string* reason) {
  if (static_cast<int>(b.size()) != m.rows()) throw error("solve: dimension mismatch");
  const int n = m.cols();
  Matrix aug(m.rows(), n + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n) = b[r];
  }
  const Echelon e = echelon_form(aug);
  for (int pc : e.pivot_cols)
    if (pc == n) {
      if (reason) *reason = "inconsistent system";
      return std::nullopt;
    }
  if (e.rank() < n) {
    if (reason) *reason = "singular system (solution not unique)";
    return std::nullopt;
  }
  Vec x(n);
  for (int row = n - 1; row >= 0; --row) {
    const int pc = e.pivot_cols[row];
    Rational s = e.mat.at(row, n);
    for (int c = pc + 1; c < n; ++c)
      if (!e.mat.at(row, c).is_zero() && !x[c].is_zero()) s -= e.mat.at(row, c) * x[c];
    x[pc] = s / e.mat.at(row, pc);
  }
  return x;
}

Vec solve_unique(const Matrix& m, const Vec& b) {
  std::string reason;
  auto x = try_solve_unique(m, b, &reason);
  if (!x) throw error("solve_unique: " + reason);
  return *x;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  Matrix a = Matrix::from_columns(basis);
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = v[r];
  }
  return rank(a) == rank(aug);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw error("inverse: non-square matrix");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Rational(1);
  }
  // Rational Gauss-Jordan; pivot = first nonzero, all steps exact.
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!aug.at(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) throw error("inverse: singular matrix");
    if (piv != col)
      for (int c = 0; c < 2 * n; ++c) std::swap(aug.at(col, c), aug.at(piv, c));
    const Rational p = aug.at(col, col);
    for (int c = 0; c < 2 * n; ++c) aug.at(col, c) /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug.at(r, col).is_zero()) continue;
      const Rational f = aug.at(r, col);
      for (int c = 0; c < 2 * n; ++c) aug.at(r, c) -= f * aug.at(col, c);
    }
  }
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw error("determinant: non-square matrix");
  const int n = m.rows();
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m.at(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(col, c), m.at(piv, c));
      det = -det;
    }
    const Rational p = m.at(col, col);
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col).is_zero()) continue;
      const Rational f = m.at(r, col) / p;
      for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

}  // namespace liecp
