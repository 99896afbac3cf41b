#include "liecp/normality.hpp"

namespace liecp {

namespace {

// Z ⊗ alpha as a matrix: column j = alpha(e_j) Z.
Endo tensor_product(const Vec& z, const AltForm& alpha) {
  const int n = static_cast<int>(z.size());
  Endo m(n, n);
  for (int j = 0; j < n; ++j) {
    const Rational a = alpha.eval_basis({j});
    if (a.is_zero()) continue;
    for (int i = 0; i < n; ++i) m.at(i, j) = a * z[i];
  }
  return m;
}

void assert_complex(const Endo& j, const char* name) {
  const int n = j.rows();
  if (!(j.multiply(j) + Matrix::identity(n)).is_zero())
    throw error(std::string(name) + ": square is not -Id (corrupted structure)");
}

}  // namespace

Endo build_J(const ContactPairStructure& S) {
  const Endo j = S.phi - tensor_product(S.pair.Z1, S.pair.alpha2) +
                 tensor_product(S.pair.Z2, S.pair.alpha1);
  assert_complex(j, "build_J");
  return j;
}

Endo build_T(const ContactPairStructure& S) {
  const Endo t = S.phi + tensor_product(S.pair.Z1, S.pair.alpha2) -
                 tensor_product(S.pair.Z2, S.pair.alpha1);
  assert_complex(t, "build_T");
  const Endo j = build_J(S);
  if (!(j.multiply(t) - t.multiply(j)).is_zero())
    throw error("build_T: J and T do not commute (corrupted structure)");
  return t;
}

namespace {

VecValued2Form expanded_tensor(const ContactPairStructure& S, int sign) {
  const LieAlgebra& L = S.pair.L;
  const int n = L.dim();
  const VecValued2Form nphi = nijenhuis(L, S.phi);
  const Endo lz1 = lie_derivative(L, S.pair.Z1, S.phi);
  const Endo lz2 = lie_derivative(L, S.pair.Z2, S.phi);

  // L_{phi e_i} alpha_k for every basis direction, computed once.
  std::vector<AltForm> la1, la2;
  la1.reserve(n);
  la2.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Vec phi_ei = S.phi.column(i);
    la1.push_back(lie_derivative(L, phi_ei, S.pair.alpha1));
    la2.push_back(lie_derivative(L, phi_ei, S.pair.alpha2));
  }

  const Rational s(sign);
  VecValued2Form t(n);
  for (int i = 0; i < n; ++i) {
    const Rational a1i = S.pair.alpha1.eval_basis({i});
    const Rational a2i = S.pair.alpha2.eval_basis({i});
    for (int j = i + 1; j < n; ++j) {
      const Rational a1j = S.pair.alpha1.eval_basis({j});
      const Rational a2j = S.pair.alpha2.eval_basis({j});

      Vec v = nphi.value(i, j);
      v = add(v, scale(S.pair.da1.eval_basis({i, j}), S.pair.Z1));
      v = add(v, scale(S.pair.da2.eval_basis({i, j}), S.pair.Z2));

      v = add(v, scale(s * a1i, lz2.column(j)));
      v = sub(v, scale(s * a1j, lz2.column(i)));
      v = add(v, scale(s * a2j, lz1.column(i)));
      v = sub(v, scale(s * a2i, lz1.column(j)));

      const Rational c2 = la1[i].eval_basis({j}) - la1[j].eval_basis({i});
      const Rational c1 = la2[j].eval_basis({i}) - la2[i].eval_basis({j});
      v = add(v, scale(s * c2, S.pair.Z2));
      v = add(v, scale(s * c1, S.pair.Z1));

      if (!is_zero(v)) t.set(i, j, std::move(v));
    }
  }
  return t;
}

}  // namespace

VecValued2Form nj_expanded(const ContactPairStructure& S) { return expanded_tensor(S, +1); }

VecValued2Form nt_expanded(const ContactPairStructure& S) { return expanded_tensor(S, -1); }

VecValued2Form normality_tensor(const ContactPairStructure& S) {
  const LieAlgebra& L = S.pair.L;
  const int n = L.dim();
  const VecValued2Form nphi = nijenhuis(L, S.phi);
  VecValued2Form t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = nphi.value(i, j);
      v = add(v, scale(S.pair.da1.eval_basis({i, j}), S.pair.Z1));
      v = add(v, scale(S.pair.da2.eval_basis({i, j}), S.pair.Z2));
      if (!is_zero(v)) t.set(i, j, std::move(v));
    }
  return t;
}

KContactFlags k_contact_flags(const ContactPairStructure& S) {
  KContactFlags f;
  f.LZ1_phi_zero = lie_derivative(S.pair.L, S.pair.Z1, S.phi).is_zero();
  f.LZ2_phi_zero = lie_derivative(S.pair.L, S.pair.Z2, S.phi).is_zero();
  return f;
}

VerificationReport almost_contact_normality(const LieAlgebra& L, const AltForm& alpha,
                                            const Vec& Z, const Endo& phi) {
  const int n = L.dim();
  if (alpha.pair(Z) != Rational(1))
    throw error("almost_contact_normality: alpha(Z) != 1");
  if (!is_zero(phi.apply(Z)))
    throw error("almost_contact_normality: phi(Z) != 0");
  const Endo want = tensor_product(Z, alpha) - Matrix::identity(n);
  if (!(phi.multiply(phi) - want).is_zero())
    throw error("almost_contact_normality: phi^2 != -Id + alpha (x) Z");

  const AltForm da = exterior_derivative(L, alpha);
  const VecValued2Form nphi = nijenhuis(L, phi);
  VerificationReport rep{"almost contact normality", {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec v = add(nphi.value(i, j), scale(da.eval_basis({i, j}), Z));
      if (!is_zero(v)) rep.fail("[phi,phi] + d(alpha) (x) Z = 0", {i + 1, j + 1}, v);
    }
  return rep;
}

namespace {

void record(NormalityReport& rep, const std::string& flag, const VecValued2Form& t) {
  if (auto w = t.first_nonzero())
    rep.witnesses.emplace(flag, Violation{flag, {w->first.first + 1, w->first.second + 1}, w->second});
}

// First failing pair of a leaf equation, positions into the given bases.
struct LeafEqResult {
  bool holds = true;
  Violation witness;
};

LeafEqResult leaf_equation(const VecValued2Form& nphi,
                           const std::vector<Vec>& left, const std::vector<Vec>& right,
                           const AltForm* da, const Vec* Z, const std::string& name,
                           bool cross) {
  LeafEqResult r;
  for (std::size_t a = 0; a < left.size(); ++a) {
    const std::size_t b0 = cross ? 0 : a + 1;
    for (std::size_t b = b0; b < right.size(); ++b) {
      Vec v = nphi.eval(left[a], right[b]);
      if (da) v = add(v, scale(da->eval({left[a], right[b]}), *Z));
      if (!is_zero(v)) {
        r.holds = false;
        r.witness = Violation{name, {static_cast<int>(a) + 1, static_cast<int>(b) + 1}, v};
        return r;
      }
    }
  }
  return r;
}

}  // namespace

NormalityReport split_system_check(const ContactPairStructure& S, const SplittingBases& B) {
  if (!is_decomposable(S.pair, S.phi, B))
    throw error("split_system_check: phi is not decomposable");

  NormalityReport rep;
  rep.decomposable = true;

  const VecValued2Form nphi = nijenhuis(S.pair.L, S.phi);
  const auto eq9 = leaf_equation(nphi, B.TF2, B.TF2, &S.pair.da1, &S.pair.Z1,
                                 "eq9 on TF2", false);
  const auto eq10 = leaf_equation(nphi, B.TF1, B.TF1, &S.pair.da2, &S.pair.Z2,
                                  "eq10 on TF1", false);
  const auto eq11 = leaf_equation(nphi, B.TF1, B.TF2, nullptr, nullptr,
                                  "eq11 on TF1 x TF2", true);
  rep.eq9 = eq9.holds;
  rep.eq10 = eq10.holds;
  rep.eq11 = eq11.holds;
  if (!eq9.holds) rep.witnesses.emplace("eq9", eq9.witness);
  if (!eq10.holds) rep.witnesses.emplace("eq10", eq10.witness);
  if (!eq11.holds) rep.witnesses.emplace("eq11", eq11.witness);

  const VerificationReport ind1 = induced_normality(S, B, 1);
  const VerificationReport ind2 = induced_normality(S, B, 2);
  rep.induced1_normal = ind1.passed();
  rep.induced2_normal = ind2.passed();
  if (rep.induced1_normal != rep.eq9 || rep.induced2_normal != rep.eq10)
    throw error("split_system_check: induced verdicts diverge from the leaf equations");

  const VecValued2Form tensor = normality_tensor(S);
  rep.pair_normal = tensor.is_zero();
  record(rep, "pair_normal", tensor);
  if (rep.pair_normal != (eq9.holds && eq10.holds && eq11.holds))
    throw error("split_system_check: split system does not aggregate to the normality tensor");

  const VecValued2Form nj = nijenhuis_complex(S.pair.L, build_J(S));
  const VecValued2Form nt = nijenhuis_complex(S.pair.L, build_T(S));
  rep.J_integrable = nj.is_zero();
  rep.T_integrable = nt.is_zero();
  record(rep, "J_integrable", nj);
  record(rep, "T_integrable", nt);
  if (rep.pair_normal != (rep.J_integrable && rep.T_integrable))
    throw error("split_system_check: tensor verdict diverges from J/T integrability");

  const KContactFlags kc = k_contact_flags(S);
  rep.LZ1_phi_zero = kc.LZ1_phi_zero;
  rep.LZ2_phi_zero = kc.LZ2_phi_zero;
  return rep;
}

VerificationReport induced_normality(const ContactPairStructure& S, const SplittingBases& B,
                                     int which) {
  if (which != 1 && which != 2) throw error("induced_normality: which must be 1 or 2");
  if (!is_decomposable(S.pair, S.phi, B))
    throw error("induced_normality: phi is not decomposable");

  // The (alpha_i, Z_i, phi) structure lives on the leaves of the opposite
  // characteristic foliation; the restriction is evaluation on its basis.
  const std::vector<Vec>& leaf = (which == 1) ? B.TF2 : B.TF1;
  const AltForm& da = (which == 1) ? S.pair.da1 : S.pair.da2;
  const Vec& Z = (which == 1) ? S.pair.Z1 : S.pair.Z2;

  const VecValued2Form nphi = nijenhuis(S.pair.L, S.phi);
  VerificationReport rep{which == 1 ? "induced structure on foliation 2" :
                                      "induced structure on foliation 1", {}};
  for (std::size_t a = 0; a < leaf.size(); ++a)
    for (std::size_t b = a + 1; b < leaf.size(); ++b) {
      const Vec v = add(nphi.eval(leaf[a], leaf[b]), scale(da.eval({leaf[a], leaf[b]}), Z));
      if (!is_zero(v))
        rep.fail("restricted [phi,phi] + d(alpha) (x) Z = 0",
                 {static_cast<int>(a) + 1, static_cast<int>(b) + 1}, v);
    }
  return rep;
}

NormalityReport normality_report(const ContactPairStructure& S) {
  const SplittingBases B = splitting_bases(S.pair);
  if (is_decomposable(S.pair, S.phi, B)) return split_system_check(S, B);

  NormalityReport rep;
  rep.decomposable = false;
  const VecValued2Form tensor = normality_tensor(S);
  const VecValued2Form nj = nijenhuis_complex(S.pair.L, build_J(S));
  const VecValued2Form nt = nijenhuis_complex(S.pair.L, build_T(S));
  rep.pair_normal = tensor.is_zero();
  rep.J_integrable = nj.is_zero();
  rep.T_integrable = nt.is_zero();
  record(rep, "pair_normal", tensor);
  record(rep, "J_integrable", nj);
  record(rep, "T_integrable", nt);
  if (rep.pair_normal != (rep.J_integrable && rep.T_integrable))
    throw error("normality_report: tensor verdict diverges from J/T integrability");
  const KContactFlags kc = k_contact_flags(S);
  rep.LZ1_phi_zero = kc.LZ1_phi_zero;
  rep.LZ2_phi_zero = kc.LZ2_phi_zero;
  return rep;
}

}  // namespace liecp
