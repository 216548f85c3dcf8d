#pragma once

#include <complex>
#include <map>
#include <string>

namespace gk::constants {

// pi / (2 log(1+sqrt 2)); log(1+sqrt 2) = arcsinh(1).
double krivine_constant();

// Real Haagerup function h(x) = x int_0^{pi/2} cos^2 t (1-x^2 sin^2 t)^{-1/2} dt
// by adaptive quadrature; |x| <= 1, endpoints return +-1 exactly.
double haagerup_h(double x);

// H(z) = sign(z) h(|z|) on the closed unit disk.
std::complex<double> haagerup_H(std::complex<double> z);

struct X0Result {
  double x0 = 0.0;        // root of h(x) = pi(x+1)/8 in (0,1)
  double c0 = 0.0;        // pi(x0+1)/8
  double residual = 0.0;  // |h(x0) - pi(x0+1)/8|
  double phi_residual = 0.0;  // |phi(c0) - 1| via the inverse-series route
};

// Bisection for x0; also verifies phi(c0) = 1 through the series module.
X0Result solve_x0(double tol = 1e-12);

// 1/c0 = 8/(pi(x0+1)).
double haagerup_constant();

struct DavieBound {
  double value = 0.0;
  double maximizer = 0.0;
};

// sup over (0,1) of (1-rho)/max(rho, f) with
//   rho(x) = sqrt(2/pi) x exp(-x^2/2)
//   f(x)   = (2/pi) exp(-x^2) + rho(x) [1 - sqrt(8/pi) int_x^inf exp(-t^2/2) dt]
// Dense grid then golden-section refinement.
DavieBound davie_real_bound();

// sup over (0,10] of (1-theta)/g with
//   theta(x) = (1/2)[1 - exp(-x^2) + x int_x^inf exp(-t^2) dt]
//   g(x)     = [(1/x)(1-exp(-x^2)) + int_x^inf exp(-t^2) dt]^2
//              + theta(x) [1 - (2/x^2)(1-exp(-x^2))]
// (The last bracket carries 1/x^2: with 1/x the expression peaks near 2,
// which contradicts the known supremum 1.33807 this reproduces.)
DavieBound davie_complex_bound();

// One-variable pieces of the Davie expressions, exposed for tests.
double davie_real_ratio(double x);
double davie_complex_ratio(double x);
double gaussian_tail(double x, double half);  // int_x^inf exp(-t^2 * half) dt

struct ConstantsReport {
  double k_real = 0.0;
  double c_arcsinh1 = 0.0;
  double x0 = 0.0;
  double c0 = 0.0;
  double k_complex = 0.0;
  double davie_real = 0.0;
  double davie_complex = 0.0;
  double davie_real_maximizer = 0.0;
  double davie_complex_maximizer = 0.0;
  std::map<std::string, double> tolerances;  // achieved residuals
  bool ordering_ok = false;  // 1 < davie_complex < k_complex < davie_real < k_real
};

ConstantsReport constants_report();

}  // namespace gk::constants
