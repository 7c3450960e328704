#pragma once

#include <string>
#include <vector>

namespace chaoskernel {

// One acceptance criterion outcome: a single pass/fail with the headline
// measured-vs-threshold pair and a human-readable diagnostic block.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  CriterionResult (*run)(unsigned workers);
};

// All eleven criteria in id order.
const std::vector<Criterion>& acceptance_registry();

// Run one criterion by id; exceptions are captured into a failed result.
CriterionResult run_criterion(int id, unsigned workers);

// Formatted one-line summary: "[ 3] PASS name measured=... threshold=... ..."
std::string format_criterion_line(const CriterionResult& r);

}  // namespace chaoskernel
