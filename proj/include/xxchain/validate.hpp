#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Cross-validation of every analytic observable against the brute-force
// state vector: residuals, correlators, entanglement measures and
// single-spin fidelities, over all regions of all chain lengths up to
// n_max with cases_per_region fields sampled inside each region.
namespace xxchain {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

std::vector<CheckResult> run_validation(int n_max, int cases_per_region);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace xxchain
