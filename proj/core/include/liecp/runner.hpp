#pragma once

#include "liecp/io.hpp"

namespace liecp {

/// Result of running a task. Exit codes: 0 = every verdict pass/as expected,
/// 1 = some check evaluated cleanly to false, 2 = error. The machine form is
/// stable-ordered (sorted keys, exact fraction strings) and contains no
/// timing, so identical inputs produce byte-identical reports.
struct RunOutcome {
  int exit_code = 0;
  nlohmann::json machine;
  std::string text;
};

RunOutcome run_task(const InputDocument& doc);

RunOutcome run_fixture_task(const std::string& name);
RunOutcome run_all_fixtures();
RunOutcome list_fixtures_outcome();

/// Reeb field of a single contact form: alpha(Z) = 1, i_Z d(alpha) = 0.
Vec solve_contact_reeb(const LieAlgebra& L, const AltForm& alpha);

}  // namespace liecp
