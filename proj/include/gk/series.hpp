#pragma once

#include <vector>

namespace gk::series {

// Truncated odd power series: coeffs[k] multiplies x^(2k+1).
struct OddPowerSeries {
  std::vector<double> coeffs;

  int order() const { return static_cast<int>(coeffs.size()); }
};

// Coefficients of the real Haagerup function
//   h(x) = sum_k pi/(4(k+1)) * ((2k-1)!!/(2k)!!)^2 * x^(2k+1).
// The double-factorial ratio is carried by the recurrence
// r_k = r_{k-1} * (2k-1)/(2k), r_0 = 1, so nothing overflows.
OddPowerSeries h_coefficients(int order);

// Horner evaluation of sum_k coeffs[k] * x^(2k+1).  Domain |x| <= 1.
double eval_odd_series(const OddPowerSeries& s, double x);

// Compositional inverse of an odd series with nonzero leading coefficient.
// Coefficient matching: c_N is solved so that composing the candidate
// inverse with s cancels the x^(2N+1) term.  Equivalent to Lagrange
// inversion without symbolic derivatives; O(order^2) per step.
OddPowerSeries invert_odd_series(const OddPowerSeries& s, int order);

// Coefficient-wise absolute value (the series called phi when applied to
// the inverse-h coefficients).
OddPowerSeries abs_series(const OddPowerSeries& s);

// Inverse-h coefficients b_{2k+1} at the requested order.  Coefficient
// matching loses roughly 0.21 decimal digits per index (the x^(2N+1) match
// divides by the (2N+1)-th power of pi/4), so it is used only for k < 48;
// higher coefficients come from the boundary-curve integral over [1,4],
// whose neglected remainder is under (4/(2k+1)) h2(4)^{-(2k+1)} < 2e-17
// there.  Both routes agree to ~1e-9 on the overlap band.
OddPowerSeries inverse_h_coefficients(int order);

// Sign pattern expected of the inverse-h coefficients: entry 0 strictly
// positive, every later entry <= tol_sign.  tol_sign absorbs rounding at
// the analytically-zero coefficient of x^5.
std::vector<bool> check_sign_pattern(const OddPowerSeries& b,
                                     double tol_sign = 1e-12);

// Composes g with s (both odd, truncated to the shorter order) and returns
// the odd coefficients of g(s(x)).  Exposed for round-trip testing.
OddPowerSeries compose_odd(const OddPowerSeries& g, const OddPowerSeries& s,
                           int order);

}  // namespace gk::series
