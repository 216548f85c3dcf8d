#include "gk/gaussian.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gk/constants.hpp"
#include "gk/parallel.hpp"
#include "gk/rng.hpp"

namespace gk::gaussian {

using std::numbers::pi;

namespace {
constexpr std::int64_t kChunk = 8192;
}

double sign_f(double z) {
  if (z > 0.0) return 1.0;
  if (z < 0.0) return -1.0;
  return 0.0;
}

Complex sign_f(Complex z) {
  const double m = std::abs(z);
  if (m == 0.0) return {0.0, 0.0};
  return z / m;
}

MonteCarloEstimate mc_pair_identity(const Vector& u, const Vector& v,
                                    Field field, std::int64_t samples,
                                    std::uint64_t seed, int threads) {
  if (u.size() != v.size())
    throw std::invalid_argument("mc_pair_identity: dimension mismatch");
  if (samples < 1) throw std::invalid_argument("mc_pair_identity: samples >= 1");
  if (std::abs(u.norm() - 1.0) > 1e-12 || std::abs(v.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("mc_pair_identity: unit vectors required");

  const int dim = static_cast<int>(u.size());
  const std::int64_t n_chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Complex> sums(n_chunks, Complex{0.0, 0.0});
  std::vector<double> sqsums(n_chunks, 0.0);

  const bool real = field == Field::kReal;
  Eigen::VectorXd ur, vr;
  if (real) {
    ur = u.real();
    vr = v.real();
  }

  parallel_chunks(n_chunks, threads, [&](std::int64_t c) {
    Rng rng = Rng::for_chunk(seed, static_cast<std::uint64_t>(c));
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(samples, lo + kChunk);
    Complex sum{0.0, 0.0};
    double sq = 0.0;
    if (real) {
      Eigen::VectorXd z(dim);
      for (std::int64_t i = lo; i < hi; ++i) {
        for (int d = 0; d < dim; ++d) z[d] = rng.next_normal();
        const double w = sign_f(ur.dot(z)) * sign_f(vr.dot(z));
        sum += w;
        sq += w * w;
      }
    } else {
      Vector z(dim);
      for (std::int64_t i = lo; i < hi; ++i) {
        for (int d = 0; d < dim; ++d) z[d] = rng.next_complex_normal();
        // sign<u,z> sign<z,v> with <x,y> = y^*x
        const Complex w = sign_f(z.dot(u)) * sign_f(v.dot(z));
        sum += w;
        sq += std::norm(w);
      }
    }
    sums[c] = sum;
    sqsums[c] = sq;
  });

  Complex total{0.0, 0.0};
  double total_sq = 0.0;
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    total += sums[c];
    total_sq += sqsums[c];
  }

  MonteCarloEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = total / static_cast<double>(samples);
  if (samples > 1) {
    const double var =
        std::max(0.0, (total_sq - std::norm(total) / samples) / (samples - 1));
    est.std_error = std::sqrt(var / samples);
  }
  return est;
}

Complex analytic_pair_value(Complex q, Field field) {
  if (field == Field::kReal) {
    const double qr = q.real();
    if (std::abs(q.imag()) > 1e-12 || std::abs(qr) > 1.0 + 1e-12)
      throw std::domain_error("analytic_pair_value: real q in [-1,1] required");
    return {2.0 / pi * std::asin(std::clamp(qr, -1.0, 1.0)), 0.0};
  }
  if (std::abs(q) > 1.0 + 1e-12)
    throw std::domain_error("analytic_pair_value: |q| <= 1 required");
  return constants::haagerup_H(q);
}

Complex verify_phase_identity(Complex z, int panels) {
  if (panels < 16) throw std::invalid_argument("verify_phase_identity: panels >= 16");
  if (z == Complex{0.0, 0.0}) return {0.0, 0.0};
  const double phase = std::arg(z);
  // Jumps of sign(Re(e^{-i theta} z)) at theta = phase +- pi/2; piece
  // boundaries aligned there, sign constant inside each piece.
  const double a0 = phase - pi / 2.0;
  Complex acc{0.0, 0.0};
  for (int piece = 0; piece < 2; ++piece) {
    const double a = a0 + piece * pi;
    const double h = pi / panels;
    const double sgn = piece == 0 ? 1.0 : -1.0;
    Complex piece_sum{0.0, 0.0};
    for (int j = 0; j < panels; ++j) {
      const double theta = a + (j + 0.5) * h;
      piece_sum += Complex{std::cos(theta), std::sin(theta)};
    }
    acc += sgn * h * piece_sum;
  }
  return 0.25 * acc;
}

}  // namespace gk::gaussian
