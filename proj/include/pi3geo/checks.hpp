#pragma once

// Numerical verification suite. Each check measures the worst deviation of a
// computed quantity from an independently derived value (closed forms, finite
// differences, or structural identities) and compares it against a tolerance.
// Checks are deterministic: all random draws are seeded per check, so a given
// (suite, tolerance, seed) triple always produces identical results.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pi3 {

/// Outcome of one verification check.
///
/// Normally the check passes when measured < tolerance. Negative controls set
/// `exceed`: they deliberately break an identity and pass only when the
/// measured deviation rises above the tolerance, guarding against vacuous
/// comparisons.
struct CheckResult {
  std::string name;
  std::string reference;  ///< plain-language statement of the verified claim
  double measured = 0.0;
  double tolerance = 0.0;
  bool exceed = false;
  bool pass = false;
  std::string detail;  ///< optional context (sample counts, worst case, ...)
};

/// (name, claim) for every known check, in suite order, without running them.
std::vector<std::pair<std::string, std::string>> list_checks();

/// Valid suite selectors for run_checks.
const std::vector<std::string>& suite_names();

/// Runs the checks belonging to `suite` ("all", "core", "expr", "curve",
/// "surface" or "revolution"). A positive tol_override replaces every
/// check's default tolerance; seed fixes the random draws.
std::vector<CheckResult> run_checks(const std::string& suite = "all",
                                    double tol_override = 0.0,
                                    std::uint64_t seed = 74207281u);

}  // namespace pi3
