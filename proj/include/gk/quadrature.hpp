#pragma once

#include <functional>

namespace gk::quad {

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;  // accumulated per-panel estimate
  int panels = 0;
};

// Adaptive panel integration with a nested Gauss pair (7- and 15-point
// Gauss-Legendre) as the error estimator.  Panels are bisected until the
// local estimate meets max(abs_tol * len/(b-a), rel_tol * |panel value|).
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 0.0,
                 int max_depth = 48);

}  // namespace gk::quad
