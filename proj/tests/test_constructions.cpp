#include <doctest.h>

#include "support.hpp"

using namespace liecp;
using namespace liecp::testing;

TEST_CASE("direct_sum reproduces the two-Heisenberg fixture") {
  const ContactPairStructure S = direct_sum(ProductSpec{heisenberg_factor(), heisenberg_factor()});
  const Fixture hh = load_fixture("heisHeis");
  CHECK(S.pair.L == hh.algebra);
  CHECK(S.phi == hh.endos.at("phi"));
  CHECK(S.pair.h == 1);
  CHECK(S.pair.k == 1);
  CHECK(normality_report(S).pair_normal);
}

TEST_CASE("direct_sum with a 1-dimensional factor gives type (1,0)") {
  const ContactPairStructure S = heis_r_structure();
  CHECK(S.pair.h == 1);
  CHECK(S.pair.k == 0);
  CHECK(verify_cps(S.pair, S.phi).passed());
  CHECK(normality_report(S).pair_normal);
}

TEST_CASE("direct_sum with an sl2-type factor is a valid type (1,1) structure") {
  const ContactPairStructure S = direct_sum(ProductSpec{sl2_factor(), heisenberg_factor()});
  CHECK(S.pair.h == 1);
  CHECK(S.pair.k == 1);
  CHECK(verify_cps(S.pair, S.phi).passed());
  CHECK(is_decomposable(S.pair, S.phi, splitting_bases(S.pair)).passed());
}

TEST_CASE("direct_sum rejects invalid factors") {
  AlmostContactFactor bad = heisenberg_factor();
  bad.phi = Endo(3, 3);
  CHECK_THROWS_AS(direct_sum(ProductSpec{bad, heisenberg_factor()}), error);
}

TEST_CASE("product normality matches the factor verdicts in both directions") {
  const auto verdict = [](const AlmostContactFactor& f) {
    return almost_contact_normality(f.L, f.alpha, f.Z, f.phi).passed();
  };
  const std::vector<std::pair<AlmostContactFactor, AlmostContactFactor>> combos = {
      {heisenberg_factor(), heisenberg_factor()},
      {heisenberg_factor(), sl2_factor()},
      {sl2_factor(), sl2_factor()},
  };
  for (const auto& [left, right] : combos) {
    const ContactPairStructure S = direct_sum(ProductSpec{left, right});
    const NormalityReport r = normality_report(S);
    CHECK(r.pair_normal == (verdict(left) && verdict(right)));
    // the leaf equations mirror the factors exactly
    CHECK(*r.eq9 == verdict(left));
    CHECK(*r.eq10 == verdict(right));
    CHECK(*r.eq11);
  }
}

TEST_CASE("central extension satisfies Jacobi iff the 2-form is closed") {
  const auto base = heis_r2_base();
  CHECK(jacobi_check(central_extension(base.csp.L, base.csp.eta)).passed());

  const AltForm bad = AltForm::wedge_pair(5, 2, 3);  // not closed on heis3 (+) R^2
  CHECK(!exterior_derivative(base.csp.L, bad).is_zero());
  CHECK(!jacobi_check(central_extension(base.csp.L, bad)).passed());
}

TEST_CASE("boothby_wang_extend on the flat base") {
  const Fixture f = load_fixture("flat3");
  const auto A = make_acss(
      make_contact_symplectic(f.algebra, f.one_forms.at("beta"), f.two_forms.at("eta")),
      f.endos.at("psi"));
  const BoothbyWangExtension E = boothby_wang_extend(A);
  REQUIRE(E.cls.ok);
  CHECK(E.cls.h == 1);
  CHECK(E.cls.k == 0);
  CHECK(E.structure->pair.Z1 == basis_vec(4, 3));
  CHECK(E.structure->pair.Z2 == basis_vec(4, 2));
  CHECK((exterior_derivative(E.algebra, E.alpha1) - embed_form(A.csp.eta, 4, 0)).is_zero());
  const NormalityReport r = normality_report(*E.structure);
  CHECK(r.pair_normal);
  CHECK(r.decomposable);
  CHECK(r.LZ1_phi_zero);
}

TEST_CASE("extension with eta = 0 fails to classify") {
  const LieAlgebra r3(3);
  const BoothbyWangExtension E =
      boothby_wang_extend_raw(r3, AltForm::covector(3, 2), AltForm(3, 2), Endo(3, 3));
  CHECK(!E.cls.ok);
  CHECK(E.cls.reason == "volume form vanishes");
  CHECK(!E.structure.has_value());
}

TEST_CASE("boothby_wang_extend on the Heisenberg base") {
  const auto A = heis_r2_base();
  const BoothbyWangExtension E = boothby_wang_extend(A);
  REQUIRE(E.cls.ok);
  CHECK(E.cls.h == 1);
  CHECK(E.cls.k == 1);
  CHECK(E.algebra.dim() == 6);
  CHECK(E.structure->pair.Z2 == embed_vec(A.csp.W, 6, 0));
}

TEST_CASE("bw base conditions match integrability upstairs") {
  // all three hold on the flat base
  const Fixture f = load_fixture("flat3");
  const auto flat = make_acss(
      make_contact_symplectic(f.algebra, f.one_forms.at("beta"), f.two_forms.at("eta")),
      f.endos.at("psi"));
  const BwBaseConditions a = bw_base_conditions(flat);
  CHECK(a.all());
  CHECK(a.j_integrable_upstairs);
  CHECK(a.equivalence_holds);

  const BwBaseConditions b = bw_base_conditions(heis_r2_base());
  CHECK(b.all());
  CHECK(b.j_integrable_upstairs);
  CHECK(b.equivalence_holds);

  // engineered failure: psi swapping the blocks breaks condition 1 and J
  const BwBaseConditions c = bw_base_conditions(heis_r2_base_mixed_psi());
  CHECK(!c.eta_compatibility);
  CHECK(!c.j_integrable_upstairs);
  CHECK(c.equivalence_holds);
  CHECK(c.witnesses.count("eta_compatibility"));
}

TEST_CASE("eta invariance") {
  CHECK(eta_invariance(heis_r2_base()).passed());
  CHECK(!eta_invariance(heis_r2_base_mixed_psi()).passed());

  // Darboux-built psi preserves its own Darboux form
  const auto base = heis_r2_base();
  const auto darboux = make_acss(base.csp, construct_decomposable_psi(base.csp));
  CHECK(eta_invariance(darboux).passed());
}

TEST_CASE("with invariant eta, J integrability equals base normality") {
  const auto cases = {heis_r2_base(), sl2_r2_base()};
  for (const auto& A : cases) {
    REQUIRE(eta_invariance(A).passed());
    const bool base_normal =
        almost_contact_normality(A.csp.L, A.csp.beta, A.csp.W, A.psi).passed();
    const BwBaseConditions c = bw_base_conditions(A);
    CHECK(c.j_integrable_upstairs == base_normal);
  }
}

TEST_CASE("with invariant eta and decomposable psi, extension normality equals base normality") {
  const Fixture f = load_fixture("flat3");
  const auto flat = make_acss(
      make_contact_symplectic(f.algebra, f.one_forms.at("beta"), f.two_forms.at("eta")),
      f.endos.at("psi"));
  for (const auto& A : {flat, heis_r2_base(), sl2_r2_base()}) {
    REQUIRE(eta_invariance(A).passed());
    REQUIRE(psi_decomposable(A.csp, A.psi).passed());
    const bool base_normal =
        almost_contact_normality(A.csp.L, A.csp.beta, A.csp.W, A.psi).passed();
    const BoothbyWangExtension E = boothby_wang_extend(A);
    CHECK(normality_report(*E.structure).pair_normal == base_normal);
  }
}

TEST_CASE("symplectic pair extension and the double lift") {
  const LieAlgebra r4(4);
  const AltForm w1 = AltForm::wedge_pair(4, 0, 1);
  const AltForm w2 = AltForm::wedge_pair(4, 2, 3);
  const ContactSymplecticPair csp = extend_symplectic_pair(r4, w1, w2);
  CHECK(csp.L.dim() == 5);
  CHECK(csp.h == 1);
  CHECK(csp.k == 1);
  CHECK((csp.dbeta - embed_form(w1, 5, 0)).is_zero());

  const BoothbyWangExtension E = double_boothby_wang(r4, w1, w2);
  REQUIRE(E.cls.ok);
  CHECK(E.algebra.dim() == 6);
  CHECK(E.cls.h == 1);
  CHECK(E.cls.k == 1);
  CHECK(verify_cps(E.structure->pair, E.structure->phi).passed());
  CHECK(normality_report(*E.structure).pair_normal);
}
