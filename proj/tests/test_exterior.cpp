#include <doctest.h>

#include "support.hpp"

using namespace liecp;

namespace {

AltForm random_form(Rng& rng, int dim, int degree, int terms = 3) {
  AltForm f(dim, degree);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx(degree);
    for (int& i : idx) i = rng.int_in(0, dim - 1);
    f.add_term(idx, rng.rational(3, 2));
  }
  return f;
}

Vec random_vec(Rng& rng, int dim) {
  Vec v(dim);
  for (auto& c : v) c = rng.rational(3, 2);
  return v;
}

const LieAlgebra& solvable6() {
  static const LieAlgebra L = load_fixture("solvable6").algebra;
  return L;
}

}  // namespace

TEST_CASE("brackets of the Heisenberg algebra") {
  const LieAlgebra L = load_fixture("heisenberg3").algebra;
  CHECK(L.bracket(basis_vec(3, 0), basis_vec(3, 1)) == basis_vec(3, 2));
  CHECK(L.bracket(basis_vec(3, 1), basis_vec(3, 0)) == scale(Rational(-1), basis_vec(3, 2)));

  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const Vec x = random_vec(rng, 3);
    CHECK(is_zero(L.bracket(x, x)));
  }
}

TEST_CASE("solvable structure equations give [X5, X6] = -X2") {
  // d(w2) = w5 ^ w6 translates to a bracket with a leading minus.
  CHECK(solvable6().bracket(basis_vec(6, 4), basis_vec(6, 5)) ==
        scale(Rational(-1), basis_vec(6, 1)));
  // round-trip through the exterior derivative
  const AltForm dw2 = exterior_derivative(solvable6(), AltForm::covector(6, 1));
  CHECK(dw2 == AltForm::wedge_pair(6, 4, 5));
}

TEST_CASE("jacobi_check") {
  CHECK(jacobi_check(LieAlgebra(5)).passed());
  CHECK(jacobi_check(solvable6()).passed());

  // [e1,e2] = e1, [e1,e3] = e2: the Jacobiator of (1,2,3) equals e2.
  LieAlgebra bad(3);
  bad.set_basis_bracket(0, 1, basis_vec(3, 0));
  bad.set_basis_bracket(0, 2, basis_vec(3, 1));
  const auto rep = jacobi_check(bad);
  REQUIRE(!rep.passed());
  CHECK(rep.violations.front().basis == std::vector<int>{1, 2, 3});
  CHECK(rep.violations.front().residual == basis_vec(3, 1));
}

TEST_CASE("wedge follows the determinant convention") {
  const AltForm e1 = AltForm::covector(4, 0), e2 = AltForm::covector(4, 1);
  CHECK(wedge(e1, AltForm(4, 2)).is_zero());
  CHECK(wedge(e1, e2).eval({basis_vec(4, 0), basis_vec(4, 1)}) == Rational(1));
  CHECK(wedge(e1, e2).eval({basis_vec(4, 1), basis_vec(4, 0)}) == Rational(-1));
  CHECK(wedge(e1, e1).is_zero());
}

TEST_CASE("solvable volume form evaluates to +1 on the basis") {
  const AltForm w2 = AltForm::covector(6, 1), w3 = AltForm::covector(6, 2);
  const AltForm dw2 = exterior_derivative(solvable6(), w2);
  const AltForm dw3 = exterior_derivative(solvable6(), w3);
  const AltForm vol = wedge(wedge(w2, dw2), wedge(w3, dw3));
  // vol = w2^w5^w6^w3^w1^w4; the permutation (2,5,6,3,1,4) has 8 inversions.
  int inversions = 0;
  const int perm[6] = {2, 5, 6, 3, 1, 4};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (perm[i] > perm[j]) ++inversions;
  CHECK(inversions == 8);
  std::vector<Vec> basis;
  for (int i = 0; i < 6; ++i) basis.push_back(basis_vec(6, i));
  CHECK(vol.eval(basis) == Rational(1));
}

TEST_CASE("wedge is associative and graded-commutative") {
  Rng rng(7);
  for (int t = 0; t < 25; ++t) {
    const int dim = rng.int_in(3, 6);
    const int da = rng.int_in(0, 2), db = rng.int_in(0, 2), dc = rng.int_in(0, 2);
    const AltForm a = random_form(rng, dim, da);
    const AltForm b = random_form(rng, dim, db);
    const AltForm c = random_form(rng, dim, dc);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    const AltForm ba = wedge(b, a);
    const AltForm ab = wedge(a, b);
    CHECK(ab == ((da * db) % 2 == 0 ? ba : ba.scaled(Rational(-1))));
  }
}

TEST_CASE("form_power") {
  Rng rng(1);
  CHECK(form_power(random_form(rng, 4, 2), 0) == AltForm::unit(4));
  const AltForm dw2 = exterior_derivative(solvable6(), AltForm::covector(6, 1));
  CHECK(form_power(dw2, 2).is_zero());

  // (e12 + e34)^2 = 2 e1234
  AltForm s(4, 2);
  s.add_term({0, 1}, Rational(1));
  s.add_term({2, 3}, Rational(1));
  AltForm expected(4, 4);
  expected.add_term({0, 1, 2, 3}, Rational(2));
  CHECK(form_power(s, 2) == expected);
}

TEST_CASE("exterior derivative on the fixtures") {
  CHECK(exterior_derivative(solvable6(), AltForm::unit(6)).is_zero());
  const LieAlgebra nil4 = load_fixture("nil4").algebra;
  CHECK(exterior_derivative(nil4, AltForm::covector(4, 2)) == AltForm::wedge_pair(4, 1, 3));
  CHECK(exterior_derivative(nil4, AltForm::covector(4, 0)).is_zero());
}

TEST_CASE("d composed with d vanishes iff Jacobi holds") {
  for (const auto& name : fixture_names()) {
    const LieAlgebra L = load_fixture(name).algebra;
    for (int i = 0; i < L.dim(); ++i)
      CHECK(exterior_derivative(L, exterior_derivative(L, AltForm::covector(L.dim(), i)))
                .is_zero());
  }
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const AltForm f = random_form(rng, 6, rng.int_in(0, 3));
    CHECK(exterior_derivative(solvable6(), exterior_derivative(solvable6(), f)).is_zero());
  }

  // Break Jacobi by mutating one structure constant: d^2 becomes nonzero on
  // some basis covector.
  const LieAlgebra broken = solvable6().with_structure_constant(1, 2, 4, Rational(1));
  CHECK(!jacobi_check(broken).passed());
  bool d2_nonzero = false;
  for (int i = 0; i < 6; ++i)
    if (!exterior_derivative(broken, exterior_derivative(broken, AltForm::covector(6, i)))
             .is_zero())
      d2_nonzero = true;
  CHECK(d2_nonzero);
}

TEST_CASE("d is an antiderivation") {
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    const AltForm a = random_form(rng, 6, rng.int_in(0, 2));
    const AltForm b = random_form(rng, 6, rng.int_in(0, 2));
    const AltForm lhs = exterior_derivative(solvable6(), wedge(a, b));
    AltForm rhs = wedge(exterior_derivative(solvable6(), a), b);
    const AltForm tail = wedge(a, exterior_derivative(solvable6(), b));
    rhs = rhs + (a.degree() % 2 == 0 ? tail : tail.scaled(Rational(-1)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("interior product") {
  const AltForm e12 = AltForm::wedge_pair(3, 0, 1);
  CHECK(interior_product(basis_vec(3, 0), e12) == AltForm::covector(3, 1));
  CHECK_THROWS_AS(interior_product(basis_vec(3, 0), AltForm::unit(3)), error);

  const AltForm dw2 = exterior_derivative(solvable6(), AltForm::covector(6, 1));
  CHECK(interior_product(basis_vec(6, 1), dw2).is_zero());  // i_{X2} d(w2) = 0

  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const Vec x = random_vec(rng, 5);
    const AltForm a = random_form(rng, 5, rng.int_in(2, 4));
    CHECK(interior_product(x, interior_product(x, a)).is_zero());
  }
}

TEST_CASE("interior product is an antiderivation") {
  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    const int da = rng.int_in(1, 2), db = rng.int_in(1, 2);
    const AltForm a = random_form(rng, 5, da);
    const AltForm b = random_form(rng, 5, db);
    const Vec x = random_vec(rng, 5);
    const AltForm lhs = interior_product(x, wedge(a, b));
    AltForm rhs = wedge(interior_product(x, a), b);
    const AltForm tail = wedge(a, interior_product(x, b));
    rhs = rhs + (da % 2 == 0 ? tail : tail.scaled(Rational(-1)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Lie derivative of forms") {
  const LieAlgebra heis = load_fixture("heisenberg3").algebra;
  // e3 is central
  CHECK(lie_derivative(heis, basis_vec(3, 2), AltForm::covector(3, 2)).is_zero());
  // X2 is a Reeb field of the solvable fixture; the basic forms are invariant
  CHECK(lie_derivative(solvable6(), basis_vec(6, 1), AltForm::covector(6, 2)).is_zero());

  // L_X commutes with d
  Rng rng(31);
  for (int t = 0; t < 15; ++t) {
    const Vec x = random_vec(rng, 6);
    const AltForm a = random_form(rng, 6, rng.int_in(0, 2));
    CHECK(lie_derivative(solvable6(), x, exterior_derivative(solvable6(), a)) ==
          exterior_derivative(solvable6(), lie_derivative(solvable6(), x, a)));
  }
}

TEST_CASE("Lie derivative of endomorphisms") {
  CHECK(lie_derivative(solvable6(), basis_vec(6, 0), Matrix::identity(6)).is_zero());

  const Fixture s6 = load_fixture("solvable6");
  CHECK(lie_derivative(solvable6(), basis_vec(6, 1), s6.endos.at("phi")).is_zero());

  // (L_{e1} Phi)(e1) = [e1, Phi e1] = -e3 on the Heisenberg algebra.
  const Fixture heis = load_fixture("heisenberg3");
  Endo expected(3, 3);
  expected.at(2, 0) = Rational(-1);
  CHECK(lie_derivative(heis.algebra, basis_vec(3, 0), heis.endos.at("phi")) == expected);
}

TEST_CASE("Nijenhuis tensor basics") {
  CHECK(nijenhuis(solvable6(), Endo(6, 6)).is_zero());
  CHECK(nijenhuis(solvable6(), Matrix::identity(6)).is_zero());

  const Fixture heis = load_fixture("heisenberg3");
  const auto n = nijenhuis(heis.algebra, heis.endos.at("phi"));
  // expansion by hand: [Phi,Phi](e1,e2) = [Phi e1, Phi e2] = [-e2, e1] = e3
  CHECK(n.value(0, 1) == basis_vec(3, 2));
  CHECK(n.value(1, 0) == scale(Rational(-1), basis_vec(3, 2)));
  CHECK(is_zero(n.value(0, 2)));
  CHECK(is_zero(n.value(1, 1)));
}

TEST_CASE("Nijenhuis values are tensorial") {
  Rng rng(37);
  const Fixture s6 = load_fixture("solvable6");
  const Endo& phi = s6.endos.at("phi");
  const auto n = nijenhuis(solvable6(), phi);
  const Endo phi2 = phi.multiply(phi);
  for (int t = 0; t < 15; ++t) {
    const Vec x = random_vec(rng, 6), y = random_vec(rng, 6);
    // direct evaluation of the defining formula on non-basis vectors
    Vec direct = phi2.apply(solvable6().bracket(x, y));
    direct = add(direct, solvable6().bracket(phi.apply(x), phi.apply(y)));
    direct = sub(direct, phi.apply(solvable6().bracket(phi.apply(x), y)));
    direct = sub(direct, phi.apply(solvable6().bracket(x, phi.apply(y))));
    CHECK(n.eval(x, y) == direct);
    CHECK(n.eval(y, x) == scale(Rational(-1), direct));
    CHECK(is_zero(n.eval(x, x)));
  }
}
