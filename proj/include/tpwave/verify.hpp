#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tpwave {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured error or ratio
  double threshold = 0.0;  // pass when value <= threshold
};

/// Manufactured-solution and oracle suites: "linear", "kuznetsov" or "all".
/// The seed drives the random-corpus cases. Throws InvalidArgument for an
/// unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int n = 16);

}  // namespace tpwave
