#include <doctest.h>

#include "liecp/fixtures.hpp"

using namespace liecp;

TEST_CASE("catalog") {
  CHECK(fixture_names() == std::vector<std::string>{"solvable6", "nilpotent6", "nil4",
                                                    "heisenberg3", "flat3", "heisHeis"});
  CHECK_THROWS_AS(load_fixture("unknown"), error);
}

TEST_CASE("every fixture passes its golden expectations") {
  for (const auto& name : fixture_names()) {
    const auto rep = run_expectations(load_fixture(name));
    INFO(rep.summary());
    CHECK(rep.passed());
  }
}

TEST_CASE("every fixture algebra satisfies Jacobi and round-trips") {
  for (const auto& name : fixture_names()) {
    const Fixture f = load_fixture(name);
    CHECK(jacobi_check(f.algebra).passed());
    CHECK(LieAlgebra::from_structure_equations(f.algebra.dim(), f.algebra.structure_equations()) ==
          f.algebra);
  }
}

TEST_CASE("solvable6 exposes exactly the recorded structure equations") {
  const Fixture f = load_fixture("solvable6");
  const auto eqs = f.algebra.structure_equations();
  REQUIRE(eqs.size() == 4);  // d(w2), d(w3), d(w4), d(w5)
  CHECK(eqs[0].target == 1);
  REQUIRE(eqs[0].terms.size() == 1);
  CHECK(eqs[0].terms[0].i == 4);
  CHECK(eqs[0].terms[0].j == 5);
  CHECK(eqs[0].terms[0].coeff == Rational(1));
  CHECK(eqs[1].target == 2);
  CHECK(eqs[2].target == 3);
  CHECK(eqs[3].target == 4);
}

TEST_CASE("a corrupted fixture fails its expectations") {
  Fixture f = load_fixture("solvable6");
  f.algebra = f.algebra.with_structure_constant(1, 2, 4, Rational(1));
  const auto rep = run_expectations(f);
  CHECK(!rep.passed());
  bool jacobi_or_classify = false;
  for (const auto& v : rep.violations)
    if (v.identity.find("jacobi") != std::string::npos ||
        v.identity.find("pair_type") != std::string::npos)
      jacobi_or_classify = true;
  CHECK(jacobi_or_classify);
}
