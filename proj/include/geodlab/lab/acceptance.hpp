#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace geodlab::lab {

/// Master seed of the acceptance suite, fixed before any run.
inline constexpr std::uint64_t kAcceptanceSeed = 20240611;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct AcceptanceOptions {
  std::vector<int> only;  ///< empty = all criteria
  unsigned workers = 0;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

/// Runs the acceptance criteria in id order. A criterion passes only if
/// its checks hold and it finishes within its runtime budget. Exceptions
/// inside a criterion are reported as failures.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS [3] sym-group-characters: ... (0.41 s / 30 s)"
std::string format_result(const CriterionResult& r);

}  // namespace geodlab::lab
