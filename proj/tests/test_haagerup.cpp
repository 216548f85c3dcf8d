#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gk/haagerup_verify.hpp"
#include "gk/series.hpp"

using namespace gk::haagerup;
using std::numbers::pi;

TEST_CASE("curve endpoints and published values") {
  const auto p1 = curve_eval(1.0);
  CHECK(p1.h1 == 1.0);
  CHECK(p1.h2 == 0.0);
  CHECK_THROWS_AS(curve_eval(0.99), std::domain_error);

  const auto p2 = curve_eval(std::sqrt(2.0));
  CHECK(std::abs(p2.h1 - 1.3506438) < 1e-6);
  CHECK(std::abs(p2.h2 - 0.5034307) < 1e-6);

  const auto p4 = curve_eval(4.0);
  CHECK(std::abs(p4.h1 - 1.5459572) < 1e-6);
  CHECK(std::abs(p4.h2 - 1.7289033) < 1e-6);

  CHECK(std::abs(p4.modulus * p4.modulus - (p4.h1 * p4.h1 + p4.h2 * p4.h2)) <
        1e-12);
  CHECK(std::abs(p4.modulus * p4.modulus - 7.0 * pi / 4.0 - (-0.1187)) < 1e-3);
}

TEST_CASE("series and quadrature forms agree") {
  for (double x : {1.05, 1.2, std::sqrt(2.0), 2.0, 4.0}) {
    const auto p = curve_eval(x);
    CHECK(std::abs(p.h1 - h1_series(x)) < 1e-9);
    CHECK(std::abs(p.h2 - h2_series(x)) < 1e-9);
  }
}

TEST_CASE("derivatives: displayed integrals vs central differences") {
  for (double x : {1.5, 2.0, 3.0}) {
    const double h = 1e-5;
    const double fd1 = (curve_eval(x + h).h1 - curve_eval(x - h).h1) / (2 * h);
    const double fd2 = (curve_eval(x + h).h2 - curve_eval(x - h).h2) / (2 * h);
    CHECK(std::abs(fd1 - h1_prime(x)) < 1e-6);
    CHECK(std::abs(fd2 - h2_prime(x)) < 1e-6);
  }
  // 0 < h1' <= pi/(4 x^2 sqrt(x^2-1))
  for (int g = 0; g < 50; ++g) {
    const double x = 1.01 * std::pow(50.0 / 1.01, g / 49.0);
    const double d = h1_prime(x);
    CHECK(d > 0.0);
    CHECK(d <= pi / (4.0 * x * x * std::sqrt(x * x - 1.0)) + 1e-15);
  }
}

TEST_CASE("omega1 is the constant pi/2") {
  for (double x : {1.01, 1.5, 2.0, 10.0, 50.0})
    CHECK(std::abs(omega1(x) - pi / 2.0) < 1e-9);
  CHECK_THROWS_AS(omega1(1.0), std::domain_error);
}

TEST_CASE("omega2 lower bound") {
  const auto rep = omega2_lower_bound();
  CHECK(std::abs(rep.bound - 2.0 * 1.3506438 * 0.5034307) < 1e-5);
  CHECK(rep.exceeds_quarter_pi);
  CHECK(rep.grid_ok);
  CHECK(rep.grid_min >= rep.bound - 1e-9);
  // direct quadrature away from the endpoint
  CHECK(omega2(1.2) >= rep.bound - 1e-9);
  CHECK(std::abs(omega2(std::sqrt(2.0)) - rep.bound) < 1e-9);
}

TEST_CASE("complete-integral helpers satisfy their derivative identities") {
  CHECK(std::abs(elliptic_E(0.0) - pi / 2.0) < 1e-12);
  CHECK(std::abs(elliptic_K(0.0) - pi / 2.0) < 1e-12);
  CHECK(elliptic_K(0.9) > elliptic_K(0.5));
  const double h = 1e-5;
  for (double y : {0.3, 0.6, 0.9}) {
    const double E = elliptic_E(y), K = elliptic_K(y);
    const double Ed = (elliptic_E(y + h) - elliptic_E(y - h)) / (2 * h);
    const double Kd = (elliptic_K(y + h) - elliptic_K(y - h)) / (2 * h);
    CHECK(std::abs(Ed - (E - K) / y) < 1e-6);
    CHECK(std::abs(Kd - (E - (1 - y * y) * K) / (y * (1 - y * y))) < 1e-6);
  }
  // curve relations h1(x) = E(1/x), h2(x) = K(y) - E(y) with y = sqrt(1-x^-2)
  const double x = 2.5;
  const auto p = curve_eval(x);
  CHECK(std::abs(p.h1 - elliptic_E(1.0 / x)) < 1e-11);
  const double y = std::sqrt(1.0 - 1.0 / (x * x));
  CHECK(std::abs(p.h2 - (elliptic_K(y) - elliptic_E(y))) < 1e-11);
}

TEST_CASE("theta is monotone and tends to pi/2") {
  double prev = -1.0;
  for (int g = 0; g <= 100; ++g) {
    const double x = 1.0 + 99.0 * g / 100.0;
    const double th = curve_eval(x).theta;
    CHECK(th > prev);
    prev = th;
    CHECK(th < pi / 2.0);
  }
  CHECK(prev > 1.2);
  CHECK(curve_eval(std::sqrt(2.0)).theta > pi / 9.0);
}

TEST_CASE("bk integral certificates") {
  // k = 1: the remainder bound dwarfs |b3|; the certificate must refuse to
  // certify, while the integral itself is negative and within budget.
  const auto c1 = bk_integral(1);
  CHECK(c1.verdict == Verdict::kInconclusive);
  CHECK(c1.integral_value < 0.0);
  CHECK(std::abs(c1.integral_value - c1.series_value) <=
        c1.quadrature_error + c1.remainder_bound + 1e-9);

  // k = 4: |b9| = 2.68e-3 sits below the remainder bound 3.22e-3, so the
  // strict budget cannot certify; agreement still holds.
  const auto c4 = bk_integral(4);
  CHECK(c4.verdict == Verdict::kInconclusive);
  CHECK(c4.integral_value < 0.0);
  CHECK(std::abs(c4.integral_value - c4.series_value) <=
        c4.quadrature_error + c4.remainder_bound + 1e-9);

  for (int k : {5, 9, 12, 20}) {
    const auto c = bk_integral(k);
    CHECK(c.verdict == Verdict::kCertifiedNegative);
    CHECK(std::abs(c.integral_value - c.series_value) <=
          c.quadrature_error + c.remainder_bound + 1e-9);
  }

  // geometric collapse of the remainder: at k = 12 it is three decades
  // below the value itself
  const auto c12 = bk_integral(12);
  CHECK(c12.remainder_bound < 1e-3 * std::abs(c12.integral_value));
  CHECK_THROWS_AS(bk_integral(0), std::invalid_argument);
}

TEST_CASE("panel decomposition checks") {
  const auto r4 = lemma53_checks(4);
  CHECK(r4.p == 2);  // floor(9 theta(4) / pi)
  CHECK(std::abs(r4.theta4 - 0.8412) < 1e-3);
  CHECK(std::abs(r4.c - 1.2059) < 1e-3);
  CHECK(r4.p_ge_2);
  CHECK(r4.strictly_decreasing);
  CHECK(r4.i2_lt_085_i1);
  CHECK(r4.i1_gt_057);
  CHECK(r4.driver_decreasing);

  for (int k : {7, 12, 20}) {
    const auto r = lemma53_checks(k);
    CHECK(r.p_ge_2);
    CHECK(r.strictly_decreasing);
    CHECK(r.i2_lt_085_i1);
    CHECK(r.i1_gt_057);
    CHECK(r.driver_decreasing);
    // signed panel sums reproduce the certificate integral
    const auto cert = bk_integral(k);
    double alt = 0.0;
    double sign = -1.0;
    for (double v : r.I) {
      alt += sign * v;
      sign = -sign;
    }
    alt += sign * r.J;
    CHECK(std::abs(alt - cert.integral_value) < 1e-12 + 1e-6 * std::abs(alt));
  }
  CHECK_THROWS_AS(lemma53_checks(3), std::invalid_argument);
}

TEST_CASE("nonpositivity certification") {
  const auto r17 = certify_nonpositivity(17);
  CHECK(r17.all_nonpositive);
  CHECK(r17.certificates.size() == 17);
  // b5 = 0 passes at tolerance
  CHECK(std::abs(r17.certificates[1].series_value) < 1e-12);

  const auto r30 = certify_nonpositivity(30);
  CHECK(r30.all_nonpositive);
  for (const auto& c : r30.certificates) {
    if (c.k >= 9) CHECK(c.verdict == Verdict::kCertifiedNegative);
    CHECK(std::abs(c.integral_value - c.series_value) <=
          c.quadrature_error + c.remainder_bound + 1e-9);
  }
}
