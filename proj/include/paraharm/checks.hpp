#pragma once

// The ten acceptance suites, shared by `paraharm selftest` and the
// acceptance test binary. Thresholds are fixed here.

#include <cstdint>
#include <string>
#include <vector>

namespace paraharm::checks {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Measured quantities against their thresholds.
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCheckCount = 10;

std::string check_name(int id);
/// Runs suite `id` in 1..10. Exceptions inside a suite count as failure.
CheckResult run_check(int id, std::uint64_t seed);
std::vector<CheckResult> run_all(std::uint64_t seed);

}  // namespace paraharm::checks
