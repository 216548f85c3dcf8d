#include "gk/rounding.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "gk/constants.hpp"
#include "gk/gaussian.hpp"
#include "gk/parallel.hpp"
#include "gk/rng.hpp"
#include "gk/series.hpp"
#include "gk/solver.hpp"

namespace gk::rounding {

namespace {

constexpr std::int64_t kChunk = 8192;

// Eigen-clip PSD repair + factorisation: factors * factors^H = gram.
void repair_and_factor(GramEmbedding& e) {
  const int dim = e.m + e.n;
  if (e.field == Field::kReal) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e.gram.real());
    Eigen::VectorXd ev = es.eigenvalues();
    double clipped = 0.0;
    for (int i = 0; i < dim; ++i) {
      if (ev[i] < 0.0) {
        clipped += -ev[i];
        ev[i] = 0.0;
      }
    }
    e.clip_magnitude = clipped;
    Eigen::MatrixXd f =
        es.eigenvectors() * ev.cwiseSqrt().asDiagonal();
    e.factors = f.cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> es(e.gram);
    Eigen::VectorXd ev = es.eigenvalues();
    double clipped = 0.0;
    for (int i = 0; i < dim; ++i) {
      if (ev[i] < 0.0) {
        clipped += -ev[i];
        ev[i] = 0.0;
      }
    }
    e.clip_magnitude = clipped;
    e.factors = es.eigenvectors() * ev.cwiseSqrt().cast<Complex>().asDiagonal();
  }
  if (e.clip_magnitude > 1e-6)
    throw std::runtime_error(
        "gram repair: negative-eigenvalue mass exceeds 1e-6; inputs are not "
        "unit vectors or an upstream transform is wrong");
}

Complex sign_or_one(Complex z) {
  const double m = std::abs(z);
  if (m == 0.0) return {1.0, 0.0};
  return z / m;
}

}  // namespace

GramEmbedding krivine_transform(const UnitVectorAssignment& a) {
  if (a.field != Field::kReal)
    throw std::invalid_argument("krivine_transform: real assignment required");
  const double c = std::asinh(1.0);
  const int m = static_cast<int>(a.xs.cols());
  const int n = static_cast<int>(a.ys.cols());
  GramEmbedding e;
  e.scheme = Scheme::kKrivine;
  e.field = Field::kReal;
  e.m = m;
  e.n = n;
  e.gram.resize(m + n, m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      e.gram(i, j) = std::sinh(c * inner(a.xs.col(i), a.xs.col(j)).real());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e.gram(m + i, m + j) = std::sinh(c * inner(a.ys.col(i), a.ys.col(j)).real());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = std::sin(c * inner(a.xs.col(i), a.ys.col(j)).real());
      e.gram(i, m + j) = v;
      e.gram(m + j, i) = v;
    }
  }
  repair_and_factor(e);
  return e;
}

GramEmbedding haagerup_transform(const UnitVectorAssignment& a,
                                 int series_order) {
  if (a.field != Field::kComplex)
    throw std::invalid_argument("haagerup_transform: complex assignment required");
  const int m = static_cast<int>(a.xs.cols());
  const int n = static_cast<int>(a.ys.cols());
  const double c0 = constants::solve_x0(1e-12).c0;
  const auto b = series::inverse_h_coefficients(series_order);
  const auto phi = series::abs_series(b);

  // sign(q) phi(c0|q|) for the same-side blocks, H^{-1}(c0 q) for the cross
  // block; both reduce to sign(q) * odd series in |q|.
  auto same_side = [&](Complex q) -> Complex {
    const double mq = std::abs(q);
    if (mq == 0.0) return {0.0, 0.0};
    return q / mq * series::eval_odd_series(phi, std::min(1.0, c0 * mq));
  };
  auto cross = [&](Complex q) -> Complex {
    const double mq = std::abs(q);
    if (mq == 0.0) return {0.0, 0.0};
    return q / mq * series::eval_odd_series(b, std::min(1.0, c0 * mq));
  };

  GramEmbedding e;
  e.scheme = Scheme::kHaagerup;
  e.field = Field::kComplex;
  e.m = m;
  e.n = n;
  e.gram.resize(m + n, m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      e.gram(i, j) = same_side(inner(a.xs.col(i), a.xs.col(j)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      e.gram(m + i, m + j) = same_side(inner(a.ys.col(i), a.ys.col(j)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex v = cross(inner(a.xs.col(i), a.ys.col(j)));
      e.gram(i, m + j) = v;
      e.gram(m + j, i) = std::conj(v);
    }
  }
  repair_and_factor(e);
  return e;
}

RoundingResult gaussian_sign_round(const GramEmbedding& e,
                                   const ProblemInstance& M,
                                   std::int64_t samples, std::uint64_t seed,
                                   int threads) {
  if (samples < 1) throw std::invalid_argument("gaussian_sign_round: samples >= 1");
  const int m = e.m, n = e.n, dim = m + n;
  if (M.m() != m || M.n() != n)
    throw std::invalid_argument("gaussian_sign_round: instance/embedding mismatch");
  const bool real = e.field == Field::kReal;

  const std::int64_t n_chunks = (samples + kChunk - 1) / kChunk;

  struct ChunkOut {
    double sum = 0.0;
    double sq = 0.0;
    double best = -1.0;
    std::int64_t best_index = -1;
    Vector best_eps, best_delta;
    Matrix pair_sum;  // m x n accumulator of eps_i conj(delta_j)
  };
  std::vector<ChunkOut> outs(n_chunks);

  const Eigen::MatrixXd fr = real ? Eigen::MatrixXd(e.factors.real()) : Eigen::MatrixXd();

  parallel_chunks(n_chunks, threads, [&](std::int64_t c) {
    Rng rng = Rng::for_chunk(seed, static_cast<std::uint64_t>(c));
    const std::int64_t lo = c * kChunk;
    const std::int64_t hi = std::min(samples, lo + kChunk);
    ChunkOut& o = outs[c];
    o.pair_sum = Matrix::Zero(m, n);
    Vector eps(m), delta(n);
    Eigen::VectorXd zr;
    Vector zc;
    if (real)
      zr.resize(dim);
    else
      zc.resize(dim);

    for (std::int64_t idx = lo; idx < hi; ++idx) {
      if (real) {
        for (int d = 0; d < dim; ++d) zr[d] = rng.next_normal();
        // <u_i, z> = u_i . z for the real field; rows of `factors` are u/v.
        const Eigen::VectorXd proj = fr * zr;
        for (int i = 0; i < m; ++i) eps[i] = proj[i] < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) delta[j] = proj[m + j] < 0.0 ? -1.0 : 1.0;
      } else {
        for (int d = 0; d < dim; ++d) zc[d] = rng.next_complex_normal();
        // <u_i, z> = z^* u_i
        const Vector proj = e.factors * zc.conjugate();
        for (int i = 0; i < m; ++i) eps[i] = sign_or_one(proj[i]);
        for (int j = 0; j < n; ++j) delta[j] = sign_or_one(proj[m + j]);
      }
      // Expectation track: Re sum M_ij eps_i conj(delta_j); the pair
      // product eps_i conj(delta_j) equals sign<u,z> sign<z,v>.
      Complex bil{0.0, 0.0};
      for (int j = 0; j < n; ++j) {
        const Complex dj = std::conj(delta[j]);
        for (int i = 0; i < m; ++i) bil += M.entries(i, j) * eps[i] * dj;
      }
      const double w = bil.real();
      o.sum += w;
      o.sq += w * w;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i)
          o.pair_sum(i, j) += eps[i] * std::conj(delta[j]);
      // Best track: the sample's feasible assignment is (eps, conj(delta)),
      // value |sum M_ij eps_i conj(delta_j)| = |bil|.
      const double bv = std::abs(bil);
      if (bv > o.best) {
        o.best = bv;
        o.best_index = idx;
        o.best_eps = eps;
        o.best_delta = delta.conjugate();
      }
    }
  });

  double total = 0.0, total_sq = 0.0;
  Matrix pair_total = Matrix::Zero(m, n);
  const ChunkOut* best_chunk = nullptr;
  for (const auto& o : outs) {
    total += o.sum;
    total_sq += o.sq;
    pair_total += o.pair_sum;
    if (best_chunk == nullptr || o.best > best_chunk->best) best_chunk = &o;
  }

  RoundingResult r;
  r.samples = samples;
  r.seed = seed;
  r.mean_value = total / static_cast<double>(samples);
  if (samples > 1) {
    const double var =
        std::max(0.0, (total_sq - total * total / samples) / (samples - 1));
    r.std_error = std::sqrt(var / samples);
  }
  r.best.eps = best_chunk->best_eps;
  r.best.delta = best_chunk->best_delta;
  r.best.value = best_chunk->best;

  // Per-pair expectation against the analytic targets from the Gram entries.
  double worst = 0.0, worst_sigma = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex q = e.gram(i, m + j);
      const double mq = std::abs(q);
      if (mq > 1.0) q /= mq;
      const Complex target = gaussian::analytic_pair_value(
          real ? Complex{q.real(), 0.0} : q, e.field);
      const Complex emp = pair_total(i, j) / static_cast<double>(samples);
      worst = std::max(worst, std::abs(emp - target));
      const double var = std::max(0.0, 1.0 - std::norm(emp));
      worst_sigma = std::max(
          worst_sigma, std::sqrt(var / static_cast<double>(samples)));
    }
  }
  r.per_pair_check = worst;
  r.per_pair_sigma = worst_sigma;
  return r;
}

Certificate rounding_certificate(const ProblemInstance& M, std::int64_t samples,
                                 std::uint64_t seed, int iters, int starts,
                                 int threads, int series_order) {
  Certificate c;
  c.relaxation = solver::relaxation_opt(M, iters, starts, seed);
  c.embedding = M.field == Field::kReal
                    ? krivine_transform(c.relaxation)
                    : haagerup_transform(c.relaxation, series_order);
  c.rounding = gaussian_sign_round(c.embedding, M, samples, seed, threads);
  c.k_bound = M.field == Field::kReal ? constants::krivine_constant()
                                      : constants::haagerup_constant();
  c.ratio_target = 1.0 / c.k_bound;
  const double rv = c.relaxation.value;
  c.ratio = rv > 0.0 ? c.rounding.mean_value / rv : 0.0;
  c.ratio_sigma = rv > 0.0 ? c.rounding.std_error / rv : 0.0;
  c.expectation_ok = std::abs(c.ratio - c.ratio_target) <= 5.0 * c.ratio_sigma;
  if (M.field == Field::kReal && std::min(M.m(), M.n()) <= 20) {
    ProblemInstance D = M;
    if (M.n() > 20) {
      D.entries = M.entries.transpose().eval();
    }
    c.discrete_value = solver::discrete_opt_real(D).value;
    c.best_feasible_ok = c.rounding.best.value <= c.discrete_value + 1e-9;
  }
  return c;
}

}  // namespace gk::rounding
