#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hts::acceptance {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double observed = 0.0;    // worst deviation measured
  double bound = 0.0;       // allowed deviation
  double seconds = 0.0;     // wall-clock time of the check
  double time_limit = 0.0;  // seconds allowed
  std::string detail;
};

/// Runs checks 1..11. Deterministic for a fixed seed.
std::vector<CheckResult> run_all(std::uint64_t seed);

/// One line per check: "[ 3/11] PASS  bg-three-form ...".
std::string format_line(const CheckResult& r);

}  // namespace hts::acceptance
