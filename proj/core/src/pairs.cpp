#include "liecp/pairs.hpp"

#include <algorithm>

namespace liecp {

namespace {

// Largest m >= 0 with base ∧ power^m != 0; base must be nonzero.
int largest_nonvanishing_power(const AltForm& base, const AltForm& power) {
  int m = 0;
  AltForm cur = base;
  while (true) {
    if (cur.degree() + power.degree() > cur.dim()) break;
    AltForm next = wedge(cur, power);
    if (next.is_zero()) break;
    cur = std::move(next);
    ++m;
  }
  return m;
}

bool is_top_nonzero(const AltForm& f) { return f.degree() == f.dim() && !f.is_zero(); }

Rational pair_form(const AltForm& alpha, const Vec& x) { return alpha.pair(x); }

}  // namespace

Matrix two_form_rows(const AltForm& w) {
  if (w.degree() != 2) throw error("two_form_rows: degree-2 form expected");
  const int n = w.dim();
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(j, i) = w.eval_basis({i, j});
  return m;
}

PairClass classify_contact_pair(const LieAlgebra& L, const AltForm& a1, const AltForm& a2) {
  if (a1.dim() != L.dim() || a2.dim() != L.dim())
    throw error("classify_contact_pair: dimension mismatch");
  if (a1.degree() != 1 || a2.degree() != 1)
    throw error("classify_contact_pair: degree-1 forms expected");

  PairClass r;
  const int n = L.dim();
  if (n % 2 != 0) {
    r.reason = "odd dimension";
    return r;
  }
  if (a1.is_zero() || a2.is_zero()) {
    r.reason = "volume form vanishes";
    return r;
  }

  const AltForm da1 = exterior_derivative(L, a1);
  const AltForm da2 = exterior_derivative(L, a2);
  const int h = largest_nonvanishing_power(a1, da1);
  const int k = largest_nonvanishing_power(a2, da2);

  if (!form_power(da1, h + 1).is_zero()) {
    r.reason = "rank conditions inconsistent: (d alpha1)^" + std::to_string(h + 1) + " != 0";
    return r;
  }
  if (!form_power(da2, k + 1).is_zero()) {
    r.reason = "rank conditions inconsistent: (d alpha2)^" + std::to_string(k + 1) + " != 0";
    return r;
  }
  // A nonzero top form forces 2h + 2k + 2 = n, so the dimension bookkeeping
  // is part of this single check.
  const AltForm vol = wedge(wedge(a1, form_power(da1, h)), wedge(a2, form_power(da2, k)));
  if (!is_top_nonzero(vol)) {
    r.reason = "volume form vanishes";
    return r;
  }
  r.ok = true;
  r.h = h;
  r.k = k;
  return r;
}

PairClass classify_symplectic_pair(const LieAlgebra& L, const AltForm& w1, const AltForm& w2) {
  if (w1.dim() != L.dim() || w2.dim() != L.dim())
    throw error("classify_symplectic_pair: dimension mismatch");
  if (w1.degree() != 2 || w2.degree() != 2)
    throw error("classify_symplectic_pair: degree-2 forms expected");

  PairClass r;
  if (!exterior_derivative(L, w1).is_zero() || !exterior_derivative(L, w2).is_zero()) {
    r.reason = "forms are not closed";
    return r;
  }
  if (w1.is_zero() || w2.is_zero()) {
    r.reason = "volume form vanishes";
    return r;
  }
  const int h = largest_nonvanishing_power(AltForm::unit(L.dim()), w1);
  const int k = largest_nonvanishing_power(AltForm::unit(L.dim()), w2);
  if (h < 1 || k < 1) {
    r.reason = "type requires h, k >= 1";
    return r;
  }
  const AltForm vol = wedge(form_power(w1, h), form_power(w2, k));
  if (!is_top_nonzero(vol)) {
    r.reason = "volume form vanishes";
    return r;
  }
  r.ok = true;
  r.h = h;
  r.k = k;
  return r;
}

std::pair<Vec, Vec> reeb_pair(const LieAlgebra& L, const AltForm& a1, const AltForm& a2) {
  const int n = L.dim();
  const AltForm da1 = exterior_derivative(L, a1);
  const AltForm da2 = exterior_derivative(L, a2);
  const Matrix d1 = two_form_rows(da1);
  const Matrix d2 = two_form_rows(da2);

  // One joint system in the unknowns (Z1; Z2).
  const int rows = 4 + 4 * n;
  Matrix sys(rows, 2 * n);
  Vec rhs(rows);
  auto covector_row = [&](int row, const AltForm& a, int block) {
    for (int i = 0; i < n; ++i) sys.at(row, block * n + i) = a.eval_basis({i});
  };
  covector_row(0, a1, 0); rhs[0] = Rational(1);   // alpha1(Z1) = 1
  covector_row(1, a2, 0); rhs[1] = Rational(0);   // alpha2(Z1) = 0
  covector_row(2, a1, 1); rhs[2] = Rational(0);   // alpha1(Z2) = 0
  covector_row(3, a2, 1); rhs[3] = Rational(1);   // alpha2(Z2) = 1
  int row = 4;
  for (const Matrix* d : {&d1, &d2})
    for (int block = 0; block < 2; ++block)
      for (int j = 0; j < n; ++j, ++row)
        for (int i = 0; i < n; ++i) sys.at(row, block * n + i) = d->at(j, i);

  std::string reason;
  auto sol = try_solve_unique(sys, rhs, &reason);
  if (!sol) throw error("reeb_pair: " + reason);
  Vec z1(sol->begin(), sol->begin() + n);
  Vec z2(sol->begin() + n, sol->end());
  return {std::move(z1), std::move(z2)};
}

ContactPair make_contact_pair(const LieAlgebra& L, const AltForm& a1, const AltForm& a2) {
  const PairClass cls = classify_contact_pair(L, a1, a2);
  if (!cls.ok) throw error("make_contact_pair: " + cls.reason);

  ContactPair P;
  P.L = L;
  P.alpha1 = a1;
  P.alpha2 = a2;
  P.da1 = exterior_derivative(L, a1);
  P.da2 = exterior_derivative(L, a2);
  P.h = cls.h;
  P.k = cls.k;
  std::tie(P.Z1, P.Z2) = reeb_pair(L, a1, a2);

  // Reeb invariants, asserted after every solve.
  if (pair_form(a1, P.Z1) != Rational(1) || pair_form(a2, P.Z2) != Rational(1) ||
      !pair_form(a1, P.Z2).is_zero() || !pair_form(a2, P.Z1).is_zero())
    throw error("make_contact_pair: Reeb normalization failed");
  for (const Vec* z : {&P.Z1, &P.Z2})
    for (const AltForm* da : {&P.da1, &P.da2})
      if (!interior_product(*z, *da).is_zero())
        throw error("make_contact_pair: Reeb contraction failed");
  if (!is_zero(L.bracket(P.Z1, P.Z2)))
    throw error("make_contact_pair: Reeb vector fields do not commute");
  return P;
}

SplittingBases splitting_bases(const ContactPair& P) {
  const int n = P.L.dim();
  auto kernel_of = [&](const AltForm& da) {
    Matrix rows(n + 2, n);
    const Matrix d = two_form_rows(da);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) rows.at(j, i) = d.at(j, i);
    for (int i = 0; i < n; ++i) {
      rows.at(n, i) = P.alpha1.eval_basis({i});
      rows.at(n + 1, i) = P.alpha2.eval_basis({i});
    }
    return kernel_basis(rows);
  };

  SplittingBases S;
  S.Z1 = P.Z1;
  S.Z2 = P.Z2;
  S.TG1 = kernel_of(P.da1);
  S.TG2 = kernel_of(P.da2);
  if (static_cast<int>(S.TG1.size()) != 2 * P.k || static_cast<int>(S.TG2.size()) != 2 * P.h)
    throw error("splitting_bases: subbundle dimensions inconsistent with type");

  S.TF1 = S.TG1;
  S.TF1.push_back(P.Z2);
  S.TF2 = S.TG2;
  S.TF2.push_back(P.Z1);

  // The four pieces must span the whole space with trivial intersections.
  std::vector<Vec> all = S.TG1;
  all.insert(all.end(), S.TG2.begin(), S.TG2.end());
  all.push_back(P.Z1);
  all.push_back(P.Z2);
  if (rank(Matrix::from_columns(all)) != n)
    throw error("splitting_bases: splitting does not span the space");

  // Involutivity of both characteristic subbundles.
  for (const auto* tf : {&S.TF1, &S.TF2}) {
    for (std::size_t a = 0; a < tf->size(); ++a)
      for (std::size_t b = a + 1; b < tf->size(); ++b)
        if (!in_span(*tf, P.L.bracket((*tf)[a], (*tf)[b])))
          throw error("splitting_bases: characteristic subbundle is not involutive");
  }
  return S;
}

VerificationReport verify_cps(const ContactPair& P, const Endo& phi) {
  VerificationReport rep{"contact pair structure", {}};
  const int n = P.L.dim();
  if (phi.rows() != n || phi.cols() != n) throw error("verify_cps: dimension mismatch");

  const Endo phi2 = phi.multiply(phi);
  for (int j = 0; j < n; ++j) {
    const Vec ej = basis_vec(n, j);
    Vec want = scale(Rational(-1), ej);
    want = add(want, scale(P.alpha1.eval_basis({j}), P.Z1));
    want = add(want, scale(P.alpha2.eval_basis({j}), P.Z2));
    const Vec got = phi2.column(j);
    if (got != want)
      rep.fail("phi^2 = -Id + alpha1 (x) Z1 + alpha2 (x) Z2", {j + 1}, sub(got, want));
  }
  if (!is_zero(phi.apply(P.Z1))) rep.fail("phi(Z1) = 0", {}, phi.apply(P.Z1));
  if (!is_zero(phi.apply(P.Z2))) rep.fail("phi(Z2) = 0", {}, phi.apply(P.Z2));
  for (int j = 0; j < n; ++j) {
    const Vec col = phi.column(j);
    const Rational v1 = P.alpha1.pair(col), v2 = P.alpha2.pair(col);
    if (!v1.is_zero()) rep.fail("alpha1 ∘ phi = 0", {j + 1}, Vec{v1});
    if (!v2.is_zero()) rep.fail("alpha2 ∘ phi = 0", {j + 1}, Vec{v2});
  }
  if (rank(phi) != n - 2) rep.fail("rank(phi) = dim - 2", {}, Vec{Rational(rank(phi) - (n - 2))});
  return rep;
}

ContactPairStructure make_cps(ContactPair pair, Endo phi) {
  const VerificationReport rep = verify_cps(pair, phi);
  if (!rep) throw error("make_cps: " + rep.summary());
  return ContactPairStructure{std::move(pair), std::move(phi)};
}

VerificationReport is_decomposable(const ContactPair& P, const Endo& phi, const SplittingBases& S) {
  if (phi.rows() != P.L.dim() || phi.cols() != P.L.dim())
    throw error("is_decomposable: dimension mismatch");
  VerificationReport rep{"decomposable phi", {}};
  auto check_stable = [&](const std::vector<Vec>& basis, const char* name) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const Vec img = phi.apply(basis[a]);
      if (!in_span(basis, img))
        rep.fail(std::string("phi preserves ") + name, {static_cast<int>(a) + 1}, img);
    }
  };
  check_stable(S.TF1, "TF1");
  check_stable(S.TF2, "TF2");
  check_stable(S.TG1, "TG1");
  check_stable(S.TG2, "TG2");
  return rep;
}

std::vector<DarbouxPair> darboux_basis(const AltForm& sigma, std::vector<Vec> basis) {
  std::vector<DarbouxPair> out;
  if (basis.size() % 2 != 0) throw error("darboux_basis: odd-dimensional subspace");
  auto pairing = [&](const Vec& x, const Vec& y) { return sigma.eval({x, y}); };

  while (!basis.empty()) {
    const Vec u = basis.front();
    basis.erase(basis.begin());
    int partner = -1;
    Rational p;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      p = pairing(u, basis[i]);
      if (!p.is_zero()) { partner = static_cast<int>(i); break; }
    }
    if (partner < 0) throw error("darboux_basis: degenerate restriction");
    const Vec v = scale(Rational(1) / p, basis[partner]);
    basis.erase(basis.begin() + partner);
    for (Vec& w : basis) {
      // Deflate: w -> w - sigma(u, w) v + sigma(v, w) u stays sigma-orthogonal
      // to the plane span(u, v).
      const Rational su = pairing(u, w);
      const Rational sv = pairing(v, w);
      if (!su.is_zero()) w = sub(w, scale(su, v));
      if (!sv.is_zero()) w = add(w, scale(sv, u));
    }
    out.push_back({u, v});
  }
  return out;
}

std::vector<DarbouxPair> randomize_darboux(const AltForm& sigma, std::vector<DarbouxPair> pairs,
                                           Rng& rng, int count) {
  if (pairs.empty()) return pairs;
  std::vector<Vec> flat;
  for (const auto& p : pairs) {
    flat.push_back(p.u);
    flat.push_back(p.v);
  }
  const int dim = static_cast<int>(flat.front().size());
  for (int step = 0; step < count; ++step) {
    Vec a = zero_vec(dim);
    for (const Vec& b : flat) a = add(a, scale(rng.rational(2, 2), b));
    if (is_zero(a)) continue;
    const Rational t = rng.nonzero_rational(2, 2);
    for (Vec& x : flat) {
      const Rational s = sigma.eval({x, a});
      if (!s.is_zero()) x = add(x, scale(t * s, a));
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pairs[i].u = flat[2 * i];
    pairs[i].v = flat[2 * i + 1];
  }
  return pairs;
}

namespace {

Endo phi_from_darboux(const ContactPair& P, const std::vector<DarbouxPair>& tg1,
                      const std::vector<DarbouxPair>& tg2) {
  const int n = P.L.dim();
  std::vector<Vec> cols, imgs;
  for (const auto* block : {&tg1, &tg2})
    for (const auto& p : *block) {
      cols.push_back(p.u);
      imgs.push_back(p.v);
      cols.push_back(p.v);
      imgs.push_back(scale(Rational(-1), p.u));
    }
  cols.push_back(P.Z1);
  imgs.push_back(zero_vec(n));
  cols.push_back(P.Z2);
  imgs.push_back(zero_vec(n));

  const Matrix basis = Matrix::from_columns(cols);
  const Matrix images = Matrix::from_columns(imgs);
  return images.multiply(inverse(basis));
}

}  // namespace

Endo construct_decomposable_phi(const ContactPair& P, const SplittingBases& S) {
  const auto tg1 = S.TG1.empty() ? std::vector<DarbouxPair>{} : darboux_basis(P.da2, S.TG1);
  const auto tg2 = S.TG2.empty() ? std::vector<DarbouxPair>{} : darboux_basis(P.da1, S.TG2);
  return phi_from_darboux(P, tg1, tg2);
}

Endo construct_decomposable_phi(const ContactPair& P, const SplittingBases& S, Rng& rng) {
  auto tg1 = S.TG1.empty() ? std::vector<DarbouxPair>{} : darboux_basis(P.da2, S.TG1);
  auto tg2 = S.TG2.empty() ? std::vector<DarbouxPair>{} : darboux_basis(P.da1, S.TG2);
  tg1 = randomize_darboux(P.da2, std::move(tg1), rng);
  tg2 = randomize_darboux(P.da1, std::move(tg2), rng);
  return phi_from_darboux(P, tg1, tg2);
}

CspResult classify_contact_symplectic(const LieAlgebra& L, const AltForm& beta, const AltForm& eta) {
  if (beta.dim() != L.dim() || eta.dim() != L.dim())
    throw error("classify_contact_symplectic: dimension mismatch");
  if (beta.degree() != 1 || eta.degree() != 2)
    throw error("classify_contact_symplectic: expected a 1-form and a 2-form");

  CspResult r;
  const int n = L.dim();
  if (n % 2 == 0) {
    r.reason = "even dimension";
    return r;
  }
  if (!exterior_derivative(L, eta).is_zero()) {
    r.reason = "eta is not closed";
    return r;
  }
  if (beta.is_zero()) {
    r.reason = "volume form vanishes";
    return r;
  }
  const AltForm dbeta = exterior_derivative(L, beta);
  const int h = largest_nonvanishing_power(beta, dbeta);
  const int k = largest_nonvanishing_power(AltForm::unit(n), eta);
  if (!form_power(dbeta, h + 1).is_zero()) {
    r.reason = "rank conditions inconsistent: (d beta)^" + std::to_string(h + 1) + " != 0";
    return r;
  }
  const AltForm vol = wedge(wedge(beta, form_power(dbeta, h)), form_power(eta, k));
  if (!is_top_nonzero(vol)) {
    r.reason = "volume form vanishes";
    return r;
  }

  // Reeb field W: beta(W) = 1, i_W d(beta) = 0, i_W eta = 0.
  Matrix sys(1 + 2 * n, n);
  Vec rhs(1 + 2 * n);
  for (int i = 0; i < n; ++i) sys.at(0, i) = beta.eval_basis({i});
  rhs[0] = Rational(1);
  const Matrix db = two_form_rows(dbeta), de = two_form_rows(eta);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      sys.at(1 + j, i) = db.at(j, i);
      sys.at(1 + n + j, i) = de.at(j, i);
    }
  std::string reason;
  auto w = try_solve_unique(sys, rhs, &reason);
  if (!w) {
    r.reason = "Reeb system: " + reason;
    return r;
  }

  ContactSymplecticPair C;
  C.L = L;
  C.beta = beta;
  C.eta = eta;
  C.dbeta = dbeta;
  C.h = h;
  C.k = k;
  C.W = *w;

  auto kernel_with_beta = [&](const Matrix& rows2) {
    Matrix m(n + 1, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) m.at(j, i) = rows2.at(j, i);
    for (int i = 0; i < n; ++i) m.at(n, i) = beta.eval_basis({i});
    return kernel_basis(m);
  };
  C.TH = kernel_with_beta(de);
  C.TF2 = kernel_with_beta(db);
  if (static_cast<int>(C.TH.size()) != 2 * h || static_cast<int>(C.TF2.size()) != 2 * k) {
    r.reason = "splitting dimensions inconsistent with type";
    return r;
  }
  // d(beta) symplectic on TH, eta symplectic on TF2.
  auto gram_rank = [&](const AltForm& w2, const std::vector<Vec>& basis) {
    Matrix g(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) g.at(a, b) = w2.eval({basis[a], basis[b]});
    return rank(g);
  };
  if (gram_rank(dbeta, C.TH) != 2 * h || gram_rank(eta, C.TF2) != 2 * k) {
    r.reason = "degenerate restriction in splitting";
    return r;
  }
  std::vector<Vec> all = C.TH;
  all.insert(all.end(), C.TF2.begin(), C.TF2.end());
  all.push_back(C.W);
  if (rank(Matrix::from_columns(all)) != n) {
    r.reason = "splitting does not span the space";
    return r;
  }

  r.ok = true;
  r.value = std::move(C);
  return r;
}

ContactSymplecticPair make_contact_symplectic(const LieAlgebra& L, const AltForm& beta,
                                              const AltForm& eta) {
  CspResult r = classify_contact_symplectic(L, beta, eta);
  if (!r.ok) throw error("make_contact_symplectic: " + r.reason);
  return std::move(*r.value);
}

VerificationReport verify_acss(const ContactSymplecticPair& C, const Endo& psi) {
  VerificationReport rep{"almost contact-symplectic structure", {}};
  const int n = C.L.dim();
  if (psi.rows() != n || psi.cols() != n) throw error("verify_acss: dimension mismatch");
  const Endo psi2 = psi.multiply(psi);
  for (int j = 0; j < n; ++j) {
    Vec want = scale(Rational(-1), basis_vec(n, j));
    want = add(want, scale(C.beta.eval_basis({j}), C.W));
    const Vec got = psi2.column(j);
    if (got != want) rep.fail("psi^2 = -Id + beta (x) W", {j + 1}, sub(got, want));
  }
  if (!is_zero(psi.apply(C.W))) rep.fail("psi(W) = 0", {}, psi.apply(C.W));
  return rep;
}

VerificationReport psi_decomposable(const ContactSymplecticPair& C, const Endo& psi) {
  VerificationReport rep{"decomposable psi", {}};
  auto check_stable = [&](const std::vector<Vec>& basis, const char* name) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const Vec img = psi.apply(basis[a]);
      if (!in_span(basis, img))
        rep.fail(std::string("psi preserves ") + name, {static_cast<int>(a) + 1}, img);
    }
  };
  check_stable(C.TH, "TH");
  check_stable(C.TF2, "TF2");
  return rep;
}

AlmostContactSymplecticStructure make_acss(ContactSymplecticPair csp, Endo psi) {
  const VerificationReport rep = verify_acss(csp, psi);
  if (!rep) throw error("make_acss: " + rep.summary());
  return AlmostContactSymplecticStructure{std::move(csp), std::move(psi)};
}

namespace {

Endo psi_from_darboux(const ContactSymplecticPair& C, const std::vector<DarbouxPair>& th,
                      const std::vector<DarbouxPair>& tf2) {
  const int n = C.L.dim();
  std::vector<Vec> cols, imgs;
  for (const auto* block : {&th, &tf2})
    for (const auto& p : *block) {
      cols.push_back(p.u);
      imgs.push_back(p.v);
      cols.push_back(p.v);
      imgs.push_back(scale(Rational(-1), p.u));
    }
  cols.push_back(C.W);
  imgs.push_back(zero_vec(n));
  return Matrix::from_columns(imgs).multiply(inverse(Matrix::from_columns(cols)));
}

}  // namespace

Endo construct_decomposable_psi(const ContactSymplecticPair& C) {
  const auto th = C.TH.empty() ? std::vector<DarbouxPair>{} : darboux_basis(C.dbeta, C.TH);
  const auto tf2 = C.TF2.empty() ? std::vector<DarbouxPair>{} : darboux_basis(C.eta, C.TF2);
  return psi_from_darboux(C, th, tf2);
}

Endo construct_decomposable_psi(const ContactSymplecticPair& C, Rng& rng) {
  auto th = C.TH.empty() ? std::vector<DarbouxPair>{} : darboux_basis(C.dbeta, C.TH);
  auto tf2 = C.TF2.empty() ? std::vector<DarbouxPair>{} : darboux_basis(C.eta, C.TF2);
  th = randomize_darboux(C.dbeta, std::move(th), rng);
  tf2 = randomize_darboux(C.eta, std::move(tf2), rng);
  return psi_from_darboux(C, th, tf2);
}

}  // namespace liecp
