#include "rough3/report.hpp"

#include <utility>

namespace rough3 {

void VerificationReport::add_pass(std::string name) {
  checks.push_back(CheckResult{std::move(name), true, {}});
}

void VerificationReport::add_fail(std::string name, std::string counterexample) {
  checks.push_back(CheckResult{std::move(name), false, std::move(counterexample)});
}

void VerificationReport::add(std::string name, bool passed, std::string counterexample) {
  if (passed) {
    add_pass(std::move(name));
  } else {
    add_fail(std::move(name), std::move(counterexample));
  }
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace rough3
