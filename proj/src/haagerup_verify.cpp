#include "gk/haagerup_verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gk/quadrature.hpp"
#include "gk/series.hpp"

namespace gk::haagerup {

using std::numbers::pi;

namespace {

constexpr double kAlpha = 4.0;

double theta_live(double x) { return curve_eval(x).theta; }

// Bisection for theta(x) = target on [lo, hi]; theta strictly increasing.
double crossing(double target, double lo, double hi) {
  double flo = theta_live(lo) - target;
  if (flo > 0.0) return lo;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (theta_live(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct SignedPanels {
  std::vector<double> bounds;  // 1 = x_0 < x_1 < ... < x_p < alpha
  int p = 0;
  double theta4 = 0.0;
};

SignedPanels locate_panels(int k) {
  SignedPanels sp;
  const int m = 2 * k + 1;
  sp.theta4 = theta_live(kAlpha);
  sp.p = static_cast<int>(std::floor(m * sp.theta4 / pi));
  sp.bounds.push_back(1.0);
  double lo = 1.0;
  for (int r = 1; r <= sp.p; ++r) {
    const double x = crossing(pi * r / m, lo, kAlpha);
    sp.bounds.push_back(x);
    lo = x;
  }
  sp.bounds.push_back(kAlpha);
  return sp;
}

}  // namespace

BkCertificate bk_integral(int k) {
  if (k < 1) throw std::invalid_argument("bk_integral: k >= 1 required");
  const int m = 2 * k + 1;
  BkCertificate cert;
  cert.k = k;
  cert.alpha = kAlpha;

  const SignedPanels sp = locate_panels(k);
  auto integrand = [&](double x) {
    const CurvePoint p = curve_eval(x);
    // Im((h1+ih2)^{-m}) = -|h+|^{-m} sin(m theta)
    return -std::pow(p.modulus, -m) * std::sin(m * p.theta);
  };

  double total = 0.0;
  double err = 0.0;
  for (size_t r = 0; r + 1 < sp.bounds.size(); ++r) {
    const auto q = quad::integrate(integrand, sp.bounds[r], sp.bounds[r + 1],
                                   1e-13, 1e-12, 30);
    total += q.value;
    err += q.error_estimate;
  }
  const double scale = 2.0 / (pi * m);
  cert.integral_value = scale * total;
  // Inner curve quadratures run at 1e-13; their effect on sin(m theta) adds
  // m * 1e-13 per unit length on top of the panel estimates.
  cert.quadrature_error = 10.0 * scale * err + scale * (kAlpha - 1.0) * m * 1e-13;
  cert.remainder_bound = kAlpha / m * std::pow(curve_eval(kAlpha).h2, -m);
  const int order = std::max(32, (k / 32 + 1) * 32);  // coarse grid of memo keys
  cert.series_value = series::inverse_h_coefficients(order).coeffs[k];
  cert.verdict = cert.integral_value + cert.quadrature_error +
                             cert.remainder_bound <
                         0.0
                     ? Verdict::kCertifiedNegative
                     : Verdict::kInconclusive;
  return cert;
}

PanelReport lemma53_checks(int k) {
  if (k < 4) throw std::invalid_argument("lemma53_checks: k >= 4 required");
  const int m = 2 * k + 1;
  PanelReport rep;
  rep.k = k;

  const SignedPanels sp = locate_panels(k);
  rep.p = sp.p;
  rep.theta4 = sp.theta4;
  rep.p_ge_2 = sp.p >= 2;

  auto abs_integrand = [&](double x) {
    const CurvePoint p = curve_eval(x);
    return std::pow(p.modulus, -m) * std::abs(std::sin(m * p.theta));
  };
  const double scale = 2.0 / (pi * m);
  for (int r = 0; r < sp.p; ++r)
    rep.I.push_back(scale * quad::integrate(abs_integrand, sp.bounds[r],
                                            sp.bounds[r + 1], 1e-16, 1e-12, 36)
                                .value);
  rep.J = scale * quad::integrate(abs_integrand, sp.bounds[sp.p], kAlpha, 1e-16,
                                  1e-12, 36)
                      .value;

  rep.strictly_decreasing = true;
  for (size_t r = 0; r + 1 < rep.I.size(); ++r)
    if (!(rep.I[r] > rep.I[r + 1])) rep.strictly_decreasing = false;
  if (!rep.I.empty() && !(rep.I.back() > rep.J)) rep.strictly_decreasing = false;

  const CurvePoint ps = curve_eval(std::sqrt(2.0));
  rep.c = ps.modulus * std::exp(-ps.theta / 2.0);
  rep.i2_lt_085_i1 = rep.I.size() >= 2 && rep.I[1] < 0.85 * rep.I[0];
  rep.i1_gt_057 =
      !rep.I.empty() &&
      rep.I[0] > 0.57 * std::pow(rep.c, -m) / (static_cast<double>(m) * m);

  // Monotonicity driver: x |h+(x)|^{-(2k+1)} decreasing on a grid of [1,4].
  rep.driver_decreasing = true;
  double prev = 0.0;
  for (int g = 0; g <= 120; ++g) {
    const double x = 1.0 + 3.0 * g / 120.0;
    const CurvePoint p = curve_eval(x);
    const double v = x * std::pow(p.modulus, -m);
    if (g > 0 && !(v < prev)) rep.driver_decreasing = false;
    prev = v;
  }
  return rep;
}

NonpositivityReport certify_nonpositivity(int kmax) {
  if (kmax < 1) throw std::invalid_argument("certify_nonpositivity: kmax >= 1");
  NonpositivityReport rep;
  rep.all_nonpositive = true;
  // Series coefficients carry ~1e-12 absolute numerical error (coefficient
  // matching head; integral tail is tighter).
  constexpr double kSeriesError = 1e-12;
  for (int k = 1; k <= kmax; ++k) {
    BkCertificate cert = bk_integral(k);
    bool ok;
    if (k <= 8) {
      ok = cert.series_value <= 1e-12;
    } else {
      ok = cert.verdict == Verdict::kCertifiedNegative ||
           cert.series_value < -10.0 * kSeriesError;
    }
    if (!ok) rep.all_nonpositive = false;
    rep.certificates.push_back(std::move(cert));
  }
  return rep;
}

Omega2Report omega2_lower_bound() {
  Omega2Report rep;
  const CurvePoint ps = curve_eval(std::sqrt(2.0));
  rep.bound = 2.0 * ps.h1 * ps.h2;
  rep.exceeds_quarter_pi = rep.bound > pi / 4.0;
  rep.grid_ok = true;
  rep.grid_min = 1e300;
  const double lo = 1.001, hi = std::sqrt(2.0);
  for (int g = 0; g <= 50; ++g) {
    const double x = lo + (hi - lo) * g / 50.0;
    const double w = omega2(x);
    rep.grid_min = std::min(rep.grid_min, w);
    if (w < rep.bound - 1e-9) rep.grid_ok = false;
  }
  return rep;
}

}  // namespace gk::haagerup
