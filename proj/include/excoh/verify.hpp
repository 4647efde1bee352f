#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace excoh {

struct CheckResult {
  std::string suite;
  std::string name;       // what was checked, e.g. "E8 p=2"
  std::string invariant;  // the property, in words
  bool ok = false;
  std::string detail;
};

// Suites: liedata, koszul, modp, integral, weyl; "all" runs each in that order.
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed, int trials);

}  // namespace excoh
