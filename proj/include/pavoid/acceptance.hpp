#pragma once

#include <string>
#include <vector>

namespace pavoid {

// One acceptance property suite's outcome.  `detail` is a one-line summary
// of the evidence (counts checked, values matched, first divergence if any).
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs acceptance suite `id` (1..10).  Unknown ids throw invalid_argument.
CriterionResult run_criterion(int id, int threads = 1);

// All ten suites in order.
std::vector<CriterionResult> run_acceptance(int threads = 1);

}  // namespace pavoid
