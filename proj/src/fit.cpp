#include "fgap/fit.hpp"

#include <cmath>
#include <cstddef>

#include "fgap/errors.hpp"

namespace fgap {

FitReport fit_line(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() != ys.size()) throw input_error("fit_line: xs/ys size mismatch");
  const std::size_t n = xs.size();
  if (n < 2) throw input_error("fit_line: need at least 2 points");

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw input_error("fit_line: degenerate abscissae");

  FitReport r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  r.max_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double res = std::fabs(ys[i] - (r.slope * xs[i] + r.intercept));
    if (res > r.max_residual) r.max_residual = res;
  }
  r.xs = std::move(xs);
  r.ys = std::move(ys);
  return r;
}

}  // namespace fgap
