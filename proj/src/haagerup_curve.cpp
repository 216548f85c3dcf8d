#include "gk/haagerup_curve.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gk/quadrature.hpp"

namespace gk::haagerup {

using std::numbers::pi;

namespace {
constexpr double kHalfPi = pi / 2.0;
}

CurvePoint curve_eval(double x) {
  if (x < 1.0) throw std::domain_error("curve_eval: x >= 1 required");
  CurvePoint p;
  p.x = x;
  if (x == 1.0) {
    p.h1 = 1.0;
    p.h2 = 0.0;
    p.theta = 0.0;
    p.modulus = 1.0;
    return p;
  }
  const double inv2 = 1.0 / (x * x);
  const double s2 = (x - 1.0) * (x + 1.0) * inv2;  // 1 - x^-2, no cancellation
  p.h1 = quad::integrate(
             [&](double t) {
               const double c = std::cos(t);
               return std::sqrt(s2 + inv2 * c * c);
             },
             0.0, kHalfPi, 1e-13)
            .value;
  p.h2 = s2 * quad::integrate(
                  [&](double t) {
                    const double s = std::sin(t);
                    const double c = std::cos(t);
                    return s * s / std::sqrt(inv2 + s2 * c * c);
                  },
                  0.0, kHalfPi, 1e-13)
                 .value;
  p.theta = std::atan2(p.h2, p.h1);
  p.modulus = std::hypot(p.h1, p.h2);
  return p;
}

double h1_series(double x) {
  if (x < 1.0) throw std::domain_error("h1_series: x >= 1 required");
  const double q = 1.0 / (x * x);
  double ratio = 1.0;  // r_k^2
  double qpow = 1.0;
  double sum = 0.0;
  for (int k = 0; k < 200000; ++k) {
    if (k > 0) {
      const double r = (2.0 * k - 1.0) / (2.0 * k);
      ratio *= r * r;
      qpow *= q;
    }
    const double term = ratio / (1.0 - 2.0 * k) * qpow;
    sum += term;
    if (std::abs(term) < 1e-17) break;
  }
  return kHalfPi * sum;
}

double h2_series(double x) {
  if (x < 1.0) throw std::domain_error("h2_series: x >= 1 required");
  const double s2 = (x - 1.0) * (x + 1.0) / (x * x);
  double ratio = 1.0;
  double spow = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 400000; ++k) {
    const double r = (2.0 * k - 1.0) / (2.0 * k);
    ratio *= r * r;
    spow *= s2;
    const double term = ratio * (2.0 * k / (2.0 * k - 1.0)) * spow;
    sum += term;
    if (term < 1e-17) break;
  }
  return kHalfPi * sum;
}

double h1_prime(double x) {
  if (x <= 1.0) throw std::domain_error("h1_prime: x > 1 required");
  const double inv2 = 1.0 / (x * x);
  const double s2 = (x - 1.0) * (x + 1.0) * inv2;
  const double integral = quad::integrate(
                              [&](double t) {
                                const double s = std::sin(t);
                                const double c = std::cos(t);
                                return s * s / std::sqrt(s2 + inv2 * c * c);
                              },
                              0.0, kHalfPi, 1e-13)
                              .value;
  return integral / (x * x * x);
}

double h2_prime(double x) {
  if (x < 1.0) throw std::domain_error("h2_prime: x >= 1 required");
  const double inv2 = 1.0 / (x * x);
  const double s2 = (x - 1.0) * (x + 1.0) * inv2;
  const double integral = quad::integrate(
                              [&](double t) {
                                const double c = std::cos(t);
                                return std::sqrt(inv2 + s2 * c * c);
                              },
                              0.0, kHalfPi, 1e-13)
                              .value;
  return integral / x;
}

double omega1(double x) {
  if (x <= 1.0) throw std::domain_error("omega1: x > 1 required");
  const CurvePoint p = curve_eval(x);
  return x * (p.h1 * h2_prime(x) - h1_prime(x) * p.h2);
}

double omega2(double x) {
  if (x <= 1.0) throw std::domain_error("omega2: x > 1 required");
  const CurvePoint p = curve_eval(x);
  return x * (p.h1 * h1_prime(x) + p.h2 * h2_prime(x));
}

double elliptic_K(double y) {
  if (std::abs(y) >= 1.0) throw std::domain_error("elliptic_K: |y| < 1 required");
  const double y2 = y * y;
  return quad::integrate(
             [&](double t) {
               const double s = std::sin(t);
               return 1.0 / std::sqrt(1.0 - y2 * s * s);
             },
             0.0, kHalfPi, 1e-13)
      .value;
}

double elliptic_E(double y) {
  if (std::abs(y) > 1.0) throw std::domain_error("elliptic_E: |y| <= 1 required");
  const double y2 = y * y;
  return quad::integrate(
             [&](double t) {
               const double s = std::sin(t);
               return std::sqrt(1.0 - y2 * s * s);
             },
             0.0, kHalfPi, 1e-13)
      .value;
}

// ---------------------------------------------------------------------------
// Cached curve
// ---------------------------------------------------------------------------

namespace {

// Chebyshev fit of f on [a,b] at n nodes; coefficients into c.
template <typename F>
void cheb_fit(const F& f, double a, double b, int n, double* c) {
  double fx[32];
  for (int j = 0; j < n; ++j) {
    const double t = std::cos(pi * (j + 0.5) / n);
    fx[j] = f(0.5 * (a + b) + 0.5 * (b - a) * t);
  }
  for (int m = 0; m < n; ++m) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += fx[j] * std::cos(pi * m * (j + 0.5) / n);
    c[m] = 2.0 / n * acc;
  }
}

double cheb_eval(const double* c, int n, double a, double b, double x) {
  const double t = (2.0 * x - a - b) / (b - a);
  double d = 0.0, dd = 0.0;
  for (int m = n - 1; m >= 1; --m) {
    const double sv = d;
    d = 2.0 * t * d - dd + c[m];
    dd = sv;
  }
  return t * d - dd + 0.5 * c[0];
}

}  // namespace

CurveCache::CurveCache() {
  // Geometric pieces toward x = 1: [1 + 3*2^-(j+1), 1 + 3*2^-j], j = 22..0.
  constexpr int kDepth = 23;
  constexpr int kNodes = 24;
  double lo = 1.0 + 3.0 * std::pow(0.5, kDepth);
  // Innermost stub [1, lo]: theta and log-modulus are linear in (x-1) to
  // within ~1e-12 there; fit it like any other piece.
  int idx = 0;
  auto add_piece = [&](double a, double b) {
    Piece& p = pieces_[idx++];
    p.a = a;
    p.b = b;
    p.n = kNodes;
    cheb_fit([](double x) { return curve_eval(x).theta; }, a, b, kNodes, p.ctheta);
    cheb_fit([](double x) { return std::log(curve_eval(x).modulus); }, a, b,
             kNodes, p.clogm);
  };
  add_piece(1.0, lo);
  for (int j = kDepth - 1; j >= 0; --j) {
    const double hi = 1.0 + 3.0 * std::pow(0.5, j);
    add_piece(lo, hi);
    lo = hi;
  }
  npieces_ = idx;
  theta_end_ = curve_eval(4.0).theta;
}

const CurveCache::Piece& CurveCache::piece_for(double x) const {
  int lo = 0, hi = npieces_ - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (x <= pieces_[mid].b)
      hi = mid;
    else
      lo = mid + 1;
  }
  return pieces_[lo];
}

double CurveCache::theta(double x) const {
  if (x <= 1.0) return 0.0;
  if (x >= 4.0) x = 4.0;
  const Piece& p = piece_for(x);
  return cheb_eval(p.ctheta, p.n, p.a, p.b, x);
}

double CurveCache::log_modulus(double x) const {
  if (x <= 1.0) return 0.0;
  if (x >= 4.0) x = 4.0;
  const Piece& p = piece_for(x);
  return cheb_eval(p.clogm, p.n, p.a, p.b, x);
}

double CurveCache::x_of_theta(double target) const {
  double lo = 1.0, hi = 4.0;
  for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (theta(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

const CurveCache& curve_cache() {
  static const CurveCache cache;
  return cache;
}

double tail_coefficient_integral(int k) {
  const CurveCache& cc = curve_cache();
  const int m = 2 * k + 1;
  const double theta4 = cc.theta_end();
  const int p = static_cast<int>(std::floor(m * theta4 / pi));

  // Panel boundaries: zeros of sin(m theta(x)) plus the endpoints.  The
  // integrand is smooth and one-signed per panel.
  auto f = [&](double x) {
    return -std::exp(-m * cc.log_modulus(x)) * std::sin(m * cc.theta(x));
  };
  double prev = 1.0;
  double total = 0.0;
  for (int r = 1; r <= p; ++r) {
    const double next = cc.x_of_theta(pi * r / m);
    total += quad::integrate(f, prev, next, 1e-14, 1e-13, 24).value;
    prev = next;
  }
  total += quad::integrate(f, prev, 4.0, 1e-14, 1e-13, 24).value;
  return 2.0 / (pi * m) * total;
}

}  // namespace gk::haagerup
