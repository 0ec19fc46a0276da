#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rough3 {

// Outcome of one named exhaustive check.  `counterexample` is empty exactly
// when the check passed; otherwise it describes the first failing instance
// in enumeration order.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;
};

// Ordered list of check outcomes produced by the verification entry points.
struct VerificationReport {
  std::vector<CheckResult> checks;

  void add_pass(std::string name);
  void add_fail(std::string name, std::string counterexample);
  void add(std::string name, bool passed, std::string counterexample);
  void append(const VerificationReport& other);
  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
};

}  // namespace rough3
