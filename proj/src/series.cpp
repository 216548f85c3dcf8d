#include "gk/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "gk/haagerup_curve.hpp"

namespace gk::series {
namespace {

// p_next = p * s^2 truncated to `order`, all series odd.
// (p has x^(2i+1) terms, s^2 has x^(2(m+1)) terms.)
std::vector<double> mul_by_square(const std::vector<double>& p,
                                  const std::vector<double>& sq, int order) {
  std::vector<double> out(order, 0.0);
  for (int k = 1; k < order; ++k) {
    double acc = 0.0;
    const int imax = k - 1;
    for (int i = 0; i <= imax; ++i) {
      const int m = k - 1 - i;
      if (i < static_cast<int>(p.size()) && m < static_cast<int>(sq.size()))
        acc += p[i] * sq[m];
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace

OddPowerSeries h_coefficients(int order) {
  if (order < 1) throw std::invalid_argument("h_coefficients: order >= 1 required");
  OddPowerSeries s;
  s.coeffs.resize(order);
  double ratio = 1.0;  // (2k-1)!!/(2k)!!
  for (int k = 0; k < order; ++k) {
    if (k > 0) ratio *= (2.0 * k - 1.0) / (2.0 * k);
    s.coeffs[k] = std::numbers::pi / (4.0 * (k + 1)) * ratio * ratio;
  }
  return s;
}

double eval_odd_series(const OddPowerSeries& s, double x) {
  if (std::abs(x) > 1.0)
    throw std::domain_error("eval_odd_series: |x| <= 1 required");
  const double x2 = x * x;
  double acc = 0.0;
  for (int k = s.order() - 1; k >= 0; --k) acc = acc * x2 + s.coeffs[k];
  return acc * x;
}

OddPowerSeries invert_odd_series(const OddPowerSeries& s, int order) {
  if (order < 1) throw std::invalid_argument("invert_odd_series: order >= 1");
  if (order > s.order())
    throw std::invalid_argument("invert_odd_series: order exceeds input order");
  if (s.coeffs[0] == 0.0)
    throw std::invalid_argument("invert_odd_series: leading coefficient is zero");

  const double a0 = s.coeffs[0];

  // sq[m] = coefficient of x^(2(m+1)) in s(x)^2
  std::vector<double> sq(order, 0.0);
  for (int m = 0; m < order; ++m) {
    double acc = 0.0;
    for (int i = 0; i <= m; ++i) {
      const int j = m - i;
      if (i < s.order() && j < s.order()) acc += s.coeffs[i] * s.coeffs[j];
    }
    sq[m] = acc;
  }

  OddPowerSeries inv;
  inv.coeffs.assign(order, 0.0);

  // power = odd coefficients of s(x)^(2N+1); total = sum_{j<N} c_j s^(2j+1)
  std::vector<double> power(s.coeffs.begin(),
                            s.coeffs.begin() + std::min<int>(order, s.order()));
  power.resize(order, 0.0);
  std::vector<double> total(order, 0.0);
  double a0_pow = a0;  // a0^(2N+1)

  for (int n = 0; n < order; ++n) {
    const double target = (n == 0) ? 1.0 : 0.0;
    const double cn = (target - total[n]) / a0_pow;
    inv.coeffs[n] = cn;
    if (n + 1 == order) break;
    for (int k = n; k < order; ++k) total[k] += cn * power[k];
    power = mul_by_square(power, sq, order);
    a0_pow *= a0 * a0;
  }
  return inv;
}

OddPowerSeries inverse_h_coefficients(int order) {
  if (order < 1)
    throw std::invalid_argument("inverse_h_coefficients: order >= 1");

  static std::mutex mu;
  static std::map<int, OddPowerSeries> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(order);
    if (it != memo.end()) return it->second;
  }

  constexpr int kMatchingLimit = 28;
  const int head = std::min(order, kMatchingLimit);
  OddPowerSeries b = invert_odd_series(h_coefficients(head), head);
  b.coeffs.resize(order, 0.0);
  for (int k = kMatchingLimit; k < order; ++k)
    b.coeffs[k] = haagerup::tail_coefficient_integral(k);

  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(order, b);
  return b;
}

OddPowerSeries abs_series(const OddPowerSeries& s) {
  OddPowerSeries out = s;
  for (double& c : out.coeffs) c = std::abs(c);
  return out;
}

std::vector<bool> check_sign_pattern(const OddPowerSeries& b, double tol_sign) {
  std::vector<bool> out(b.order());
  for (int k = 0; k < b.order(); ++k)
    out[k] = (k == 0) ? (b.coeffs[0] > 0.0) : (b.coeffs[k] <= tol_sign);
  return out;
}

OddPowerSeries compose_odd(const OddPowerSeries& g, const OddPowerSeries& s,
                           int order) {
  std::vector<double> sq(order, 0.0);
  for (int m = 0; m < order; ++m) {
    double acc = 0.0;
    for (int i = 0; i <= m; ++i) {
      const int j = m - i;
      if (i < s.order() && j < s.order()) acc += s.coeffs[i] * s.coeffs[j];
    }
    sq[m] = acc;
  }
  std::vector<double> power(s.coeffs.begin(),
                            s.coeffs.begin() + std::min<int>(order, s.order()));
  power.resize(order, 0.0);

  OddPowerSeries out;
  out.coeffs.assign(order, 0.0);
  const int jmax = std::min(order, g.order());
  for (int j = 0; j < jmax; ++j) {
    for (int k = 0; k < order; ++k) out.coeffs[k] += g.coeffs[j] * power[k];
    if (j + 1 < jmax) power = mul_by_square(power, sq, order);
  }
  return out;
}

}  // namespace gk::series
