#pragma once

#include <string>
#include <vector>

namespace normeuclid::reproduce {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct ReproduceOptions {
  // Shrinks the crossing range, the dual-method moduli and the scan; used for
  // quick smoke runs. The full run is what the acceptance suite executes.
  bool fast = false;
  int jobs = 0;
};

/// Runs one numbered criterion (1..10).
CriterionResult run_criterion(int id, const ReproduceOptions& options = {});

/// Runs criteria 1..10 in order.
std::vector<CriterionResult> run_all(const ReproduceOptions& options = {});

/// Catalan's constant from the alternating series sum (-1)^k/(2k+1)^2,
/// averaging consecutive partial sums.
double catalan_series(long terms);

}  // namespace normeuclid::reproduce
