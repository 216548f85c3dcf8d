#pragma once

#include <string>
#include <vector>

#include "gk/haagerup_curve.hpp"

namespace gk::haagerup {

enum class Verdict { kCertifiedNegative, kInconclusive };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::kCertifiedNegative ? "certified_negative" : "inconclusive";
}

// Numerically certified sign of one inverse-series coefficient via the
// boundary-curve integral over [1, alpha] with alpha = 4.
struct BkCertificate {
  int k = 0;
  double alpha = 4.0;
  double integral_value = 0.0;   // (2/(pi(2k+1))) int_1^4 Im((h1+ih2)^{-(2k+1)})
  double quadrature_error = 0.0; // conservative: 10x accumulated panel estimate
  double remainder_bound = 0.0;  // (alpha/(2k+1)) h2(alpha)^{-(2k+1)}
  double series_value = 0.0;     // b_{2k+1} from the series module
  Verdict verdict = Verdict::kInconclusive;
};

// Live-quadrature certificate: the integral is split at the zeros of
// sin((2k+1) theta(x)) (theta is strictly increasing; crossings located by
// bisection) and each panel integrated adaptively.
BkCertificate bk_integral(int k);

// Panel decomposition quantities for the oscillatory integral:
// p = floor((2k+1) theta(4)/pi), panel integrals I_1..I_p and the final
// stub J, plus the constants entering the lower/upper bounds.
struct PanelReport {
  int k = 0;
  int p = 0;
  std::vector<double> I;  // I_1..I_p (absolute values)
  double J = 0.0;
  double c = 0.0;          // |h+(sqrt 2)| e^{-theta(sqrt 2)/2}
  double theta4 = 0.0;
  bool p_ge_2 = false;
  bool strictly_decreasing = false;  // I_1 > ... > I_p > J
  bool i2_lt_085_i1 = false;
  bool i1_gt_057 = false;            // I_1 > 0.57 c^{-(2k+1)}/(2k+1)^2
  bool driver_decreasing = false;    // x |h+(x)|^{-(2k+1)} on a [1,4] grid
};

PanelReport lemma53_checks(int k);

// For k = 1..8 the series values decide (b <= 1e-12); for k >= 9 a
// certificate must be certified_negative, or the series value must clear
// -10x its estimated numerical error.  Inconclusive certificates are
// reported, not fatal, when the series fallback is decisive.
struct NonpositivityReport {
  std::vector<BkCertificate> certificates;
  bool all_nonpositive = false;
};

NonpositivityReport certify_nonpositivity(int kmax);

// 2 h1(sqrt2) h2(sqrt2), asserted > pi/4, with a grid check of
// omega2(x) >= bound on [1.001, sqrt 2].
struct Omega2Report {
  double bound = 0.0;
  bool exceeds_quarter_pi = false;
  bool grid_ok = false;
  double grid_min = 0.0;
};

Omega2Report omega2_lower_bound();

}  // namespace gk::haagerup
