#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace csgauge::verification {

enum class Level { fast, full };

struct Options {
  Level level = Level::fast;
  std::uint64_t seed = 20240611;
  // Mutation hook: perturbs omega0(2) by a relative 1e-6 before it is checked.
  bool tamper_omega0 = false;
};

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suites. `fast` finishes in seconds; `full` adds the
/// translated-profile rate test and the ball minimizations (a few minutes).
std::vector<CheckResult> run(const Options& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace csgauge::verification
