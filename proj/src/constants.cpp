#include "gk/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gk/quadrature.hpp"
#include "gk/series.hpp"

namespace gk::constants {

using std::numbers::pi;

double krivine_constant() { return pi / (2.0 * std::log(1.0 + std::sqrt(2.0))); }

double haagerup_h(double x) {
  if (std::abs(x) > 1.0) throw std::domain_error("haagerup_h: |x| <= 1 required");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  if (x == -1.0) return -1.0;
  const double x2 = x * x;
  const double r = quad::integrate(
                       [&](double t) {
                         const double c = std::cos(t);
                         const double s = std::sin(t);
                         return c * c / std::sqrt(1.0 - x2 * s * s);
                       },
                       0.0, pi / 2.0, 1e-12)
                       .value;
  return x * r;
}

std::complex<double> haagerup_H(std::complex<double> z) {
  const double m = std::abs(z);
  if (m > 1.0 + 1e-14) throw std::domain_error("haagerup_H: |z| <= 1 required");
  if (m == 0.0) return {0.0, 0.0};
  return z / m * haagerup_h(std::min(m, 1.0));
}

X0Result solve_x0(double tol) {
  if (!(tol > 0.0) || tol > 1e-10)
    throw std::invalid_argument("solve_x0: 0 < tol <= 1e-10 required");
  auto g = [](double x) { return haagerup_h(x) - pi / 8.0 * (x + 1.0); };
  double lo = 0.0, hi = 1.0;
  const double glo = g(lo), ghi = g(hi);
  if (!(glo < 0.0 && ghi > 0.0))
    throw std::runtime_error("solve_x0: bracketing failed, quadrature suspect");
  while (hi - lo > 0.25 * tol) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  X0Result r;
  r.x0 = 0.5 * (lo + hi);
  r.c0 = pi * (r.x0 + 1.0) / 8.0;
  r.residual = std::abs(g(r.x0));
  const auto b = series::inverse_h_coefficients(256);
  const auto phi = series::abs_series(b);
  r.phi_residual = std::abs(series::eval_odd_series(phi, r.c0) - 1.0);
  return r;
}

double haagerup_constant() { return 1.0 / solve_x0(1e-12).c0; }

double gaussian_tail(double x, double half) {
  // t = x + s/(1-s) maps [0,1) onto [x, inf); integrand vanishes at s -> 1.
  return quad::integrate(
             [&](double s) {
               const double om = 1.0 - s;
               if (om <= 0.0) return 0.0;
               const double t = x + s / om;
               return std::exp(-half * t * t) / (om * om);
             },
             0.0, 1.0, 1e-12)
      .value;
}

double davie_real_ratio(double x) {
  const double rho = std::sqrt(2.0 / pi) * x * std::exp(-0.5 * x * x);
  const double tail = gaussian_tail(x, 0.5);
  const double f = 2.0 / pi * std::exp(-x * x) +
                   rho * (1.0 - std::sqrt(8.0 / pi) * tail);
  return (1.0 - rho) / std::max(rho, f);
}

double davie_complex_ratio(double x) {
  const double ex = std::exp(-x * x);
  const double tail = gaussian_tail(x, 1.0);
  const double theta = 0.5 * (1.0 - ex + x * tail);
  const double a = (1.0 - ex) / x + tail;
  const double g = a * a + theta * (1.0 - 2.0 * (1.0 - ex) / (x * x));
  return (1.0 - theta) / g;
}

namespace {

template <typename F>
DavieBound supremum(const F& ratio, double lo, double hi, double step) {
  double best_x = lo + step;
  double best = ratio(best_x);
  for (double x = lo + step; x < hi + 0.5 * step; x += step) {
    const double v = ratio(std::min(x, hi));
    if (v > best) {
      best = v;
      best_x = std::min(x, hi);
    }
  }
  // Golden-section refinement around the best grid point.
  double a = std::max(lo + 0.5 * step, best_x - step);
  double b = std::min(hi, best_x + step);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = ratio(c), fd = ratio(d);
  while (b - a > 1e-10) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = ratio(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = ratio(d);
    }
  }
  DavieBound out;
  out.maximizer = 0.5 * (a + b);
  out.value = ratio(out.maximizer);
  if (out.value < best) {
    out.value = best;
    out.maximizer = best_x;
  }
  return out;
}

}  // namespace

DavieBound davie_real_bound() {
  return supremum(davie_real_ratio, 0.0, 1.0, 1e-4);
}

DavieBound davie_complex_bound() {
  return supremum(davie_complex_ratio, 0.0, 10.0, 1e-4);
}

ConstantsReport constants_report() {
  ConstantsReport r;
  r.k_real = krivine_constant();
  r.c_arcsinh1 = std::asinh(1.0);
  const X0Result x0 = solve_x0(1e-12);
  r.x0 = x0.x0;
  r.c0 = x0.c0;
  r.k_complex = 1.0 / x0.c0;
  const DavieBound dr = davie_real_bound();
  const DavieBound dc = davie_complex_bound();
  r.davie_real = dr.value;
  r.davie_complex = dc.value;
  r.davie_real_maximizer = dr.maximizer;
  r.davie_complex_maximizer = dc.maximizer;
  r.tolerances["x0_residual"] = x0.residual;
  r.tolerances["phi_c0_residual"] = x0.phi_residual;
  r.tolerances["arcsinh_identity"] =
      std::abs(std::log(1.0 + std::sqrt(2.0)) - r.c_arcsinh1);
  r.ordering_ok = 1.0 < r.davie_complex && r.davie_complex < r.k_complex &&
                  r.k_complex < r.davie_real && r.davie_real < r.k_real;
  return r;
}

}  // namespace gk::constants
