#pragma once

namespace gk::haagerup {

// Point on the boundary curve of the analytic extension of the real
// Haagerup function: for x >= 1 the extension equals h1(x) + i*h2(x).
struct CurvePoint {
  double x = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double theta = 0.0;    // Arg(h1 + i h2)
  double modulus = 0.0;  // |h1 + i h2|
};

// Adaptive-quadrature evaluation of
//   h1(x) = int_0^{pi/2} sqrt(1 - x^-2 sin^2 t) dt
//   h2(x) = (1 - x^-2) int_0^{pi/2} sin^2 t / sqrt(1 - (1-x^-2) sin^2 t) dt
// Radicands are formed as (1-x^-2) + x^-2 cos^2 t and x^-2 + (1-x^-2) cos^2 t
// so the endpoint t = pi/2 never cancels.  x = 1 returns (1, 0) exactly.
CurvePoint curve_eval(double x);

// Series forms of the same functions (independent evaluation route):
//   h1(x) = pi/2 sum_k r_k^2 x^-2k / (1-2k),      r_k = (2k-1)!!/(2k)!!
//   h2(x) = pi/2 sum_k r_k^2 (2k/(2k-1)) (1-x^-2)^k
double h1_series(double x);
double h2_series(double x);

// Derivatives from their displayed integral forms:
//   h1'(x) = x^-3 int_0^{pi/2} sin^2 t / sqrt(1 - x^-2 sin^2 t) dt   (x > 1)
//   h2'(x) = x^-1 int_0^{pi/2} sqrt(1 - (1-x^-2) sin^2 t) dt
double h1_prime(double x);
double h2_prime(double x);

// omega1(x) = x (h1 h2' - h1' h2), identically pi/2 on (1, inf).
double omega1(double x);
// omega2(x) = x (h1 h1' + h2 h2').
double omega2(double x);

// Complete-integral style helpers used only to spot-check derivative
// identities; evaluated by direct quadrature of their definitions.
double elliptic_K(double y);
double elliptic_E(double y);

// Cached piecewise-Chebyshev model of theta(x) and log|h1+ih2| on [1,4].
// Pieces refine geometrically toward x = 1 where h1 carries a (x-1)log(x-1)
// term.  Absolute accuracy ~1e-11; used for bulk evaluation of the
// inverse-coefficient tail integrals.
class CurveCache {
 public:
  CurveCache();
  double theta(double x) const;
  double log_modulus(double x) const;
  double theta_end() const { return theta_end_; }  // theta(4)

  // Inverse of theta on [1,4] by bisection (theta is strictly increasing).
  double x_of_theta(double target) const;

 private:
  struct Piece {
    double a, b;
    // Chebyshev coefficients for theta and log-modulus on [a,b]
    double ctheta[32];
    double clogm[32];
    int n;
  };
  static constexpr int kMaxPieces = 40;
  Piece pieces_[kMaxPieces];
  int npieces_ = 0;
  double theta_end_ = 0.0;

  const Piece& piece_for(double x) const;
};

const CurveCache& curve_cache();

// (2/(pi(2k+1))) int_1^4 Im((h1+ih2)^{-(2k+1)}) dx evaluated on the cached
// curve with panels aligned to the zeros of sin((2k+1) theta(x)).  The
// neglected contour remainder is below (4/(2k+1)) h2(4)^{-(2k+1)}, which is
// < 2e-17 for k >= 51; callers use this only for such k.
double tail_coefficient_integral(int k);

}  // namespace gk::haagerup
