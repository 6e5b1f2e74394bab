#pragma once

#include <string>
#include <vector>

namespace wgs {

/// One executed property check: the measured value, the bound it was held to,
/// and the verdict.
struct VerifyCheck {
  std::string name;
  bool passed = false;
  double value = 0.0;      ///< measured quantity (defect, ratio, count, ...)
  double threshold = 0.0;  ///< bound applied; 0 when the check is monitored-only
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
};

/// Runs the operator-level property suite: weak-gradient kernel dimension,
/// the divergence bound on random weak functions, the projection commuting
/// identities, moment-projection reproduction and divergence orthogonality,
/// the norm equivalence and discrete embedding monitors, and a desk-scale
/// inf-sup scan.
VerifyReport run_verify(unsigned seed = 20240815u);

/// Formats one line per check ("PASS <name> value=... bound=...").
std::string format_verify(const VerifyReport& report);

}  // namespace wgs
