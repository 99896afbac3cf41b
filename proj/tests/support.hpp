// Shared builders for tests and the acceptance suite: extra algebras beyond
// the built-in catalog, and the seeded generator of random valid contact
// pair structures.
#pragma once

#include <vector>

#include "liecp/constructions.hpp"
#include "liecp/fixtures.hpp"

namespace liecp::testing {

inline AlmostContactFactor heisenberg_factor() {
  const Fixture f = load_fixture("heisenberg3");
  return {f.algebra, f.one_forms.at("alpha"), f.vectors.at("Z"), f.endos.at("phi")};
}

// [e1,e2] = e3, [e3,e1] = 2 e1, [e3,e2] = -2 e2 with contact form e^3 and a
// rotation tensor. Valid almost contact structure, not normal.
inline AlmostContactFactor sl2_factor() {
  LieAlgebra L(3);
  L.set_basis_bracket(0, 1, basis_vec(3, 2));
  L.set_basis_bracket(2, 0, scale(Rational(2), basis_vec(3, 0)));
  L.set_basis_bracket(2, 1, scale(Rational(-2), basis_vec(3, 1)));
  Endo phi(3, 3);
  phi.at(1, 0) = Rational(1);   // phi e1 = e2
  phi.at(0, 1) = Rational(-1);  // phi e2 = -e1
  return {L, AltForm::covector(3, 2), basis_vec(3, 2), phi};
}

// The trivial 1-dimensional factor: alpha = e^1, Z = e1, phi = 0.
inline AlmostContactFactor line_factor() {
  return {LieAlgebra(1), AltForm::covector(1, 0), basis_vec(1, 0), Endo(1, 1)};
}

// Type (1,0) structure on heis3 (+) R.
inline ContactPairStructure heis_r_structure() {
  return direct_sum(ProductSpec{heisenberg_factor(), line_factor()});
}

inline ContactPairStructure heis_sl2_structure() {
  return direct_sum(ProductSpec{heisenberg_factor(), sl2_factor()});
}

// Contact-symplectic base heis3 (+) R^2 of type (1,1): beta the contact
// covector, eta the area form of the flat factor, block psi.
inline AlmostContactSymplecticStructure heis_r2_base() {
  LieAlgebra L = direct_sum(load_fixture("heisenberg3").algebra, LieAlgebra(2));
  AltForm beta = AltForm::covector(5, 2);
  AltForm eta = AltForm::wedge_pair(5, 3, 4);
  Endo psi(5, 5);
  psi.at(1, 0) = Rational(-1);  // psi e1 = -e2
  psi.at(0, 1) = Rational(1);   // psi e2 = e1
  psi.at(4, 3) = Rational(1);   // psi e4 = e5
  psi.at(3, 4) = Rational(-1);  // psi e5 = -e4
  return make_acss(make_contact_symplectic(L, beta, eta), psi);
}

// Variant with psi swapping the two symplectic blocks: still a valid acss
// tensor, but eta is no longer psi-invariant.
inline AlmostContactSymplecticStructure heis_r2_base_mixed_psi() {
  AlmostContactSymplecticStructure a = heis_r2_base();
  Endo psi(5, 5);
  psi.at(3, 0) = Rational(1);   // psi e1 = e4
  psi.at(0, 3) = Rational(-1);  // psi e4 = -e1
  psi.at(4, 1) = Rational(1);   // psi e2 = e5
  psi.at(1, 4) = Rational(-1);  // psi e5 = -e2
  return make_acss(a.csp, psi);
}

// Non-normal base with eta psi-invariant and psi decomposable.
inline AlmostContactSymplecticStructure sl2_r2_base() {
  const AlmostContactFactor sl2 = sl2_factor();
  LieAlgebra L = direct_sum(sl2.L, LieAlgebra(2));
  AltForm beta = AltForm::covector(5, 2);
  AltForm eta = AltForm::wedge_pair(5, 3, 4);
  Endo psi = embed_endo(sl2.phi, 5, 0);
  psi.at(4, 3) = Rational(1);
  psi.at(3, 4) = Rational(-1);
  return make_acss(make_contact_symplectic(L, beta, eta), psi);
}

// A shear A = Id + t v (x) xi with v in TG1 (+) TG2 and xi vanishing on both
// Reeb fields. Conjugation by A preserves every contact pair structure
// identity but generically destroys decomposability.
inline Endo random_pair_shear(const ContactPair& P, const SplittingBases& S, Rng& rng) {
  const int n = P.L.dim();
  std::vector<Vec> tg = S.TG1;
  tg.insert(tg.end(), S.TG2.begin(), S.TG2.end());

  const std::vector<Vec> ann = kernel_basis(Matrix::from_rows({P.Z1, P.Z2}));
  while (true) {
    Vec v = zero_vec(n);
    for (const Vec& b : tg) v = add(v, scale(rng.rational(2, 2), b));
    Vec xi = zero_vec(n);
    for (const Vec& b : ann) xi = add(xi, scale(rng.rational(2, 2), b));
    if (is_zero(v) || is_zero(xi)) continue;

    const Rational t = rng.nonzero_rational(2, 2);
    Rational xi_v;
    for (int i = 0; i < n; ++i) xi_v += xi[i] * v[i];
    if ((Rational(1) + t * xi_v).is_zero()) continue;  // singular shear

    Endo A = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) += t * v[i] * xi[j];
    return A;
  }
}

struct Instance {
  ContactPairStructure S;
  bool built_decomposable;  // true when phi came straight from the Darboux construction
};

// Seeded family of valid contact pair structures in dimensions 4 and 6,
// normal and non-normal, decomposable and not.
inline std::vector<Instance> random_instances(std::uint64_t seed, int count = 20) {
  Rng rng(seed);

  std::vector<ContactPair> bases;
  bases.push_back(heis_r_structure().pair);                                    // dim 4, (1,0)
  {
    const Fixture f = load_fixture("nil4");
    bases.push_back(make_contact_pair(f.algebra, f.one_forms.at("alpha1"),
                                      f.one_forms.at("alpha2")));              // dim 4, (1,0)
  }
  for (const char* name : {"solvable6", "nilpotent6", "heisHeis"}) {
    const Fixture f = load_fixture(name);
    bases.push_back(make_contact_pair(f.algebra, f.one_forms.at("alpha1"),
                                      f.one_forms.at("alpha2")));              // dim 6
  }
  bases.push_back(heis_sl2_structure().pair);                                  // dim 6, (1,1)

  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    const ContactPair& P = bases[i % bases.size()];
    const SplittingBases B = splitting_bases(P);
    Endo phi = construct_decomposable_phi(P, B, rng);
    bool dec = true;
    if (i % 2 == 1) {
      const Endo A = random_pair_shear(P, B, rng);
      phi = A.multiply(phi).multiply(inverse(A));
      dec = false;
    }
    out.push_back({make_cps(P, phi), dec});
  }
  return out;
}

}  // namespace liecp::testing
