#pragma once

#include <cstddef>
#include <vector>

namespace fgap {

// Least-squares line fit in log-log space. xs/ys are already logarithms;
// max_residual exposes departure from a pure power law.
struct FitReport {
  std::vector<double> xs;
  std::vector<double> ys;
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

// Equal-weight least squares of ys against xs. Requires >= 2 points
// (callers enforce their own stricter minimums).
FitReport fit_line(std::vector<double> xs, std::vector<double> ys);

}  // namespace fgap
