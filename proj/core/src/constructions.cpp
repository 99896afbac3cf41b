#include "liecp/constructions.hpp"

namespace liecp {

Vec embed_vec(const Vec& v, int total, int offset) {
  if (offset + static_cast<int>(v.size()) > total) throw error("embed_vec: out of range");
  Vec r = zero_vec(total);
  for (std::size_t i = 0; i < v.size(); ++i) r[offset + i] = v[i];
  return r;
}

AltForm embed_form(const AltForm& f, int total, int offset) {
  AltForm r(total, f.degree());
  for (const auto& [idx, c] : f.terms()) {
    std::vector<int> shifted = idx;
    for (int& i : shifted) i += offset;
    r.add_term(std::move(shifted), c);
  }
  return r;
}

Endo embed_endo(const Endo& f, int total, int offset) {
  Endo r(total, total);
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) r.at(offset + i, offset + j) = f.at(i, j);
  return r;
}

VerificationReport verify_almost_contact(const AlmostContactFactor& F) {
  VerificationReport rep{"almost contact structure", {}};
  const int n = F.L.dim();
  if (F.alpha.pair(F.Z) != Rational(1)) rep.fail("alpha(Z) = 1", {}, Vec{F.alpha.pair(F.Z)});
  if (!is_zero(F.phi.apply(F.Z))) rep.fail("phi(Z) = 0", {}, F.phi.apply(F.Z));
  const Endo phi2 = F.phi.multiply(F.phi);
  for (int j = 0; j < n; ++j) {
    Vec want = scale(Rational(-1), basis_vec(n, j));
    want = add(want, scale(F.alpha.eval_basis({j}), F.Z));
    if (phi2.column(j) != want)
      rep.fail("phi^2 = -Id + alpha (x) Z", {j + 1}, sub(phi2.column(j), want));
  }
  return rep;
}

ContactPairStructure direct_sum(const ProductSpec& P) {
  for (const auto* f : {&P.left, &P.right}) {
    const VerificationReport rep = verify_almost_contact(*f);
    if (!rep) throw error("direct_sum: factor invariant violated: " + rep.summary());
  }
  const int na = P.left.L.dim(), nb = P.right.L.dim(), n = na + nb;
  const LieAlgebra L = direct_sum(P.left.L, P.right.L);
  const AltForm a1 = embed_form(P.left.alpha, n, 0);
  const AltForm a2 = embed_form(P.right.alpha, n, na);
  const Endo phi = embed_endo(P.left.phi, n, 0) + embed_endo(P.right.phi, n, na);

  ContactPair pair = make_contact_pair(L, a1, a2);
  if (pair.h != (na - 1) / 2 || pair.k != (nb - 1) / 2)
    throw error("direct_sum: type does not match factor dimensions");
  if (pair.Z1 != embed_vec(P.left.Z, n, 0) || pair.Z2 != embed_vec(P.right.Z, n, na))
    throw error("direct_sum: Reeb fields are not the factor Reeb fields");

  ContactPairStructure S = make_cps(std::move(pair), phi);
  const SplittingBases B = splitting_bases(S.pair);
  if (!is_decomposable(S.pair, S.phi, B))
    throw error("direct_sum: block phi failed the decomposability check");
  return S;
}

LieAlgebra central_extension(const LieAlgebra& L, const AltForm& eta) {
  if (eta.dim() != L.dim() || eta.degree() != 2)
    throw error("central_extension: 2-form on the base expected");
  const int n = L.dim();
  LieAlgebra ext(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = embed_vec(L.basis_bracket(i, j), n + 1, 0);
      v[n] -= eta.eval_basis({i, j});
      ext.set_basis_bracket(i, j, std::move(v));
    }
  return ext;  // e_{n+1} is central: no bracket touches it
}

BoothbyWangExtension boothby_wang_extend_raw(const LieAlgebra& L, const AltForm& beta,
                                             const AltForm& eta, const Endo& psi) {
  const int n = L.dim();
  if (beta.degree() != 1 || eta.degree() != 2 || beta.dim() != n || eta.dim() != n ||
      psi.rows() != n || psi.cols() != n)
    throw error("boothby_wang_extend: shape mismatch");

  BoothbyWangExtension E;
  E.algebra = central_extension(L, eta);
  E.alpha1 = AltForm::covector(n + 1, n);
  E.alpha2 = embed_form(beta, n + 1, 0);
  E.phi = embed_endo(psi, n + 1, 0);
  E.cls = classify_contact_pair(E.algebra, E.alpha1, E.alpha2);
  if (E.cls.ok)
    E.structure = make_cps(make_contact_pair(E.algebra, E.alpha1, E.alpha2), E.phi);
  return E;
}

BoothbyWangExtension boothby_wang_extend(const AlmostContactSymplecticStructure& A) {
  if (!exterior_derivative(A.csp.L, A.csp.eta).is_zero())
    throw error("boothby_wang_extend: eta is not closed");
  const VerificationReport acss = verify_acss(A.csp, A.psi);
  if (!acss) throw error("boothby_wang_extend: " + acss.summary());

  BoothbyWangExtension E = boothby_wang_extend_raw(A.csp.L, A.csp.beta, A.csp.eta, A.psi);
  if (!E.cls.ok)
    throw error("boothby_wang_extend: extension is not a contact pair: " + E.cls.reason);

  const int n = A.csp.L.dim();
  if (!(exterior_derivative(E.algebra, E.alpha1) - embed_form(A.csp.eta, n + 1, 0)).is_zero())
    throw error("boothby_wang_extend: d(alpha1) is not the pullback of eta");
  const ContactPair& pair = E.structure->pair;
  if (pair.Z1 != basis_vec(n + 1, n) || pair.Z2 != embed_vec(A.csp.W, n + 1, 0))
    throw error("boothby_wang_extend: Reeb fields are not the expected lifts");
  if (!lie_derivative(E.algebra, pair.Z1, E.phi).is_zero())
    throw error("boothby_wang_extend: phi is not invariant along the new Reeb direction");

  if (psi_decomposable(A.csp, A.psi)) {
    const SplittingBases B = splitting_bases(pair);
    if (!is_decomposable(pair, E.phi, B))
      throw error("boothby_wang_extend: decomposability was not inherited");
  }
  return E;
}

BwBaseConditions bw_base_conditions(const AlmostContactSymplecticStructure& A) {
  const LieAlgebra& L = A.csp.L;
  const int n = L.dim();
  const AltForm& eta = A.csp.eta;
  const AltForm& dbeta = A.csp.dbeta;
  const Endo& psi = A.psi;
  const VecValued2Form npsi = nijenhuis(L, psi);

  BwBaseConditions R;
  R.eta_compatibility = true;
  R.nijenhuis_compatibility = true;

  for (int i = 0; i < n; ++i) {
    const Vec pi = psi.column(i);
    for (int j = i + 1; j < n; ++j) {
      const Vec pj = psi.column(j);
      const Vec ei = basis_vec(n, i), ej = basis_vec(n, j);

      const Rational c1 = eta.eval_basis({i, j}) - eta.eval({pi, pj}) -
                          dbeta.eval({pi, ej}) - dbeta.eval({ei, pj});
      if (!c1.is_zero() && R.eta_compatibility) {
        R.eta_compatibility = false;
        R.witnesses.emplace("eta_compatibility",
                            Violation{"condition 1", {i + 1, j + 1}, Vec{c1}});
      }

      const Rational w = dbeta.eval_basis({i, j}) + eta.eval({pi, ej}) + eta.eval({ei, pj});
      const Vec c2 = add(npsi.value(i, j), scale(w, A.csp.W));
      if (!is_zero(c2) && R.nijenhuis_compatibility) {
        R.nijenhuis_compatibility = false;
        R.witnesses.emplace("nijenhuis_compatibility",
                            Violation{"condition 2", {i + 1, j + 1}, c2});
      }
    }
  }

  const Endo lw = lie_derivative(L, A.csp.W, psi);
  R.reeb_invariance = lw.is_zero();
  if (!R.reeb_invariance)
    R.witnesses.emplace("reeb_invariance", Violation{"condition 3 (L_W psi = 0)", {}, lw.column(0)});

  // Ground truth upstairs, computed independently on the actual extension.
  const BoothbyWangExtension E = boothby_wang_extend(A);
  R.j_integrable_upstairs = nijenhuis_complex(E.algebra, build_J(*E.structure)).is_zero();
  R.equivalence_holds = (R.all() == R.j_integrable_upstairs);
  return R;
}

VerificationReport eta_invariance(const AlmostContactSymplecticStructure& A) {
  const int n = A.csp.L.dim();
  VerificationReport rep{"eta invariance under psi", {}};
  for (int i = 0; i < n; ++i) {
    const Vec pi = A.psi.column(i);
    for (int j = i + 1; j < n; ++j) {
      const Rational diff = A.csp.eta.eval({pi, A.psi.column(j)}) - A.csp.eta.eval_basis({i, j});
      if (!diff.is_zero())
        rep.fail("eta(psi X, psi Y) = eta(X, Y)", {i + 1, j + 1}, Vec{diff});
    }
  }
  return rep;
}

ContactSymplecticPair extend_symplectic_pair(const LieAlgebra& L, const AltForm& w1,
                                             const AltForm& w2) {
  const PairClass cls = classify_symplectic_pair(L, w1, w2);
  if (!cls.ok) throw error("extend_symplectic_pair: " + cls.reason);
  const int n = L.dim();
  const LieAlgebra ext = central_extension(L, w1);
  const AltForm beta = AltForm::covector(n + 1, n);
  const AltForm eta = embed_form(w2, n + 1, 0);
  ContactSymplecticPair csp = make_contact_symplectic(ext, beta, eta);
  if (csp.h != cls.h || csp.k != cls.k)
    throw error("extend_symplectic_pair: unexpected type change");
  return csp;
}

BoothbyWangExtension double_boothby_wang(const LieAlgebra& L, const AltForm& w1,
                                         const AltForm& w2) {
  ContactSymplecticPair csp = extend_symplectic_pair(L, w1, w2);
  Endo psi = construct_decomposable_psi(csp);
  return boothby_wang_extend(make_acss(std::move(csp), std::move(psi)));
}

}  // namespace liecp
