#pragma once

#include <map>
#include <string>
#include <vector>

#include "liecp/constructions.hpp"

namespace liecp {

/// One golden expectation: a named predicate evaluated by run_expectations
/// and compared against the recorded value ("true", "false", "(1,1)", ...).
struct Expectation {
  std::string predicate;
  std::string expected;
};

/// A named example: algebra, distinguished forms/tensors under fixed role
/// names (alpha1/alpha2/phi, beta/eta/psi, alpha/Z/phi), plus its golden
/// expectations.
struct Fixture {
  std::string name;
  LieAlgebra algebra{1};
  std::map<std::string, AltForm> one_forms;
  std::map<std::string, AltForm> two_forms;
  std::map<std::string, Endo> endos;
  std::map<std::string, Vec> vectors;
  std::vector<Expectation> expectations;
};

/// Catalog: solvable6, nilpotent6, nil4, heisenberg3, flat3, heisHeis.
const std::vector<std::string>& fixture_names();
Fixture load_fixture(const std::string& name);

/// Evaluates every expectation; any mismatch is a failure naming the
/// predicate.
VerificationReport run_expectations(const Fixture& F);

}  // namespace liecp
