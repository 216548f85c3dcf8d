#include "gk/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gk::quad {
namespace {

// Gauss-Legendre nodes/weights on [-1,1], computed once by Newton iteration
// on P_n (standard gauleg construction, converges to machine precision).
template <int N>
struct GaussRule {
  std::array<double, N> x{};
  std::array<double, N> w{};

  GaussRule() {
    const int m = (N + 1) / 2;
    for (int i = 0; i < m; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 1.0, p2 = 0.0;
        for (int j = 0; j < N; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
        }
        pp = N * (z * p1 - p2) / (z * z - 1.0);
        const double z1 = z;
        z = z1 - p1 / pp;
        if (std::abs(z - z1) < 1e-16) break;
      }
      x[i] = -z;
      x[N - 1 - i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
      w[N - 1 - i] = w[i];
    }
  }
};

const GaussRule<7>& rule7() {
  static const GaussRule<7> r;
  return r;
}
const GaussRule<15>& rule15() {
  static const GaussRule<15> r;
  return r;
}

struct Panel {
  double value;
  double error;
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double g7 = 0.0, g15 = 0.0;
  for (int i = 0; i < 7; ++i) g7 += rule7().w[i] * f(c + h * rule7().x[i]);
  for (int i = 0; i < 15; ++i) g15 += rule15().w[i] * f(c + h * rule15().x[i]);
  g7 *= h;
  g15 *= h;
  return {g15, std::abs(g15 - g7)};
}

void integrate_rec(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, double rel_tol, int depth, int max_depth,
                   Result& out) {
  const Panel p = eval_panel(f, a, b);
  const double goal = std::max(abs_tol, rel_tol * std::abs(p.value));
  if (p.error <= goal || depth >= max_depth) {
    out.value += p.value;
    out.error_estimate += p.error;
    out.panels += 1;
    return;
  }
  const double c = 0.5 * (a + b);
  integrate_rec(f, a, c, 0.5 * abs_tol, rel_tol, depth + 1, max_depth, out);
  integrate_rec(f, c, b, 0.5 * abs_tol, rel_tol, depth + 1, max_depth, out);
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, double rel_tol, int max_depth) {
  if (!(a <= b)) throw std::invalid_argument("integrate: bad interval");
  Result out;
  if (a == b) return out;
  integrate_rec(f, a, b, abs_tol, rel_tol, 0, max_depth, out);
  return out;
}

}  // namespace gk::quad
