#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "liecp/linalg.hpp"

namespace liecp {

/// One concrete failure: which identity broke, on which basis tuple
/// (1-based indices), and the nonzero residual that witnesses it.
struct Violation {
  std::string identity;
  std::vector<int> basis;
  Vec residual;
};

/// Pass/fail outcome of a verification. Empty violation list means pass.
struct VerificationReport {
  std::string check;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  explicit operator bool() const { return passed(); }

  void fail(std::string identity, std::vector<int> basis, Vec residual) {
    violations.push_back({std::move(identity), std::move(basis), std::move(residual)});
  }

  std::string summary() const {
    std::ostringstream os;
    os << check << ": " << (passed() ? "pass" : "FAIL");
    if (!passed()) {
      const Violation& v = violations.front();
      os << " [" << v.identity << " at (";
      for (std::size_t i = 0; i < v.basis.size(); ++i) {
        if (i) os << ",";
        os << v.basis[i];
      }
      os << "), residual " << vec_str(v.residual) << "]";
    }
    return os.str();
  }
};

}  // namespace liecp
