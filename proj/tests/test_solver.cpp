#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gk/constants.hpp"
#include "gk/rng.hpp"
#include "gk/solver.hpp"

using namespace gk;
using namespace gk::solver;
using std::numbers::pi;

namespace {

ProblemInstance make_real(int m, int n, std::initializer_list<double> vals) {
  ProblemInstance inst;
  inst.field = Field::kReal;
  inst.entries.resize(m, n);
  auto it = vals.begin();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) inst.entries(i, j) = *it++;
  return inst;
}

ProblemInstance random_instance(int m, int n, Field field, Rng& rng) {
  ProblemInstance inst;
  inst.field = field;
  inst.entries.resize(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      inst.entries(i, j) = field == Field::kReal
                               ? Complex{rng.next_normal(), 0.0}
                               : Complex{rng.next_complex_normal()};
  return inst;
}

// Independent oracle: enumerate all sign pairs directly.
double brute_force_real(const ProblemInstance& M) {
  const int m = M.m(), n = M.n();
  double best = 0.0;
  for (std::uint64_t a = 0; a < (1ull << m); ++a) {
    for (std::uint64_t b = 0; b < (1ull << n); ++b) {
      Complex acc{0.0, 0.0};
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
          acc += M.entries(i, j) * ((a >> i & 1) ? -1.0 : 1.0) *
                 ((b >> j & 1) ? -1.0 : 1.0);
      best = std::max(best, std::abs(acc));
    }
  }
  return best;
}

// Dense phase-grid oracle over the delta torus with the closed-form eps
// step; adequate for n <= 2.
double phase_grid_oracle(const ProblemInstance& M, int steps) {
  REQUIRE(M.n() <= 2);
  double best = 0.0;
  const int outer = M.n() == 2 ? steps : 1;
  for (int g1 = 0; g1 < steps; ++g1) {
    for (int g2 = 0; g2 < outer; ++g2) {
      Vector delta(M.n());
      delta[0] = std::exp(Complex{0.0, 2.0 * pi * g1 / steps});
      if (M.n() == 2) delta[1] = std::exp(Complex{0.0, 2.0 * pi * g2 / steps});
      const Vector rs = M.entries * delta;
      best = std::max(best, rs.cwiseAbs().sum());
    }
  }
  return best;
}

}  // namespace

TEST_CASE("real discrete optimum on pinned instances") {
  const auto one = discrete_opt_real(make_real(1, 1, {1.0}));
  CHECK(one.value == doctest::Approx(1.0));

  const auto chsh = discrete_opt_real(make_real(2, 2, {1.0, 1.0, 1.0, -1.0}));
  CHECK(chsh.value == doctest::Approx(2.0));
  CHECK(brute_force_real(make_real(2, 2, {1.0, 1.0, 1.0, -1.0})) ==
        doctest::Approx(2.0));

  const auto eye = discrete_opt_real(make_real(2, 2, {1.0, 0.0, 0.0, 1.0}));
  CHECK(eye.value == doctest::Approx(2.0));
}

TEST_CASE("real discrete optimum equals brute force on random instances") {
  for (int t = 0; t < 20; ++t) {
    Rng rng(1000 + t);
    const int m = 2 + static_cast<int>(rng.next_u64() % 3);
    const int n = 2 + static_cast<int>(rng.next_u64() % 3);
    const auto M = random_instance(m, n, Field::kReal, rng);
    const auto got = discrete_opt_real(M);
    CHECK(got.value == doctest::Approx(brute_force_real(M)).epsilon(1e-12));
    // assignment reproduces the value
    CHECK(bilinear_value(M, got.eps, got.delta) ==
          doctest::Approx(got.value).epsilon(1e-12));
  }
}

TEST_CASE("real discrete edge cases") {
  // zero row sum takes sign +1
  const auto z = discrete_opt_real(make_real(2, 2, {1.0, -1.0, 1.0, 1.0}));
  CHECK(std::abs(z.eps[0] - Complex{1.0, 0.0}) < 1e-15 /* row sum 0 at best delta */);

  ProblemInstance wide;
  wide.field = Field::kReal;
  wide.entries = Matrix::Zero(1, 31);
  CHECK_THROWS_AS(discrete_opt_real(wide), BudgetError);

  ProblemInstance cplx;
  cplx.field = Field::kComplex;
  cplx.entries = Matrix::Zero(2, 2);
  CHECK_THROWS_AS(discrete_opt_real(cplx), std::invalid_argument);
}

TEST_CASE("complex discrete heuristic") {
  ProblemInstance one;
  one.field = Field::kComplex;
  one.entries = Matrix::Zero(1, 1);
  one.entries(0, 0) = 1.0;
  CHECK(discrete_opt_complex(one, 4, 1).value == doctest::Approx(1.0));

  // CHSH over the complex signs: delta = (1, i) gives |1+i| + |1-i|,
  // so the optimum rises from 2 to 2 sqrt 2 (the grid oracle confirms)
  ProblemInstance chsh;
  chsh.field = Field::kComplex;
  chsh.entries.resize(2, 2);
  chsh.entries << 1.0, 1.0, 1.0, -1.0;
  const double opt = 2.0 * std::sqrt(2.0);
  const double grid = phase_grid_oracle(chsh, 720);
  const auto got = discrete_opt_complex(chsh, 16, 7);
  CHECK(std::abs(grid - opt) < 1e-3);
  CHECK(std::abs(got.value - opt) < 1e-6);
  CHECK(got.value >= grid - 1e-3);

  // complex relaxing a real instance can only help
  for (int t = 0; t < 10; ++t) {
    Rng rng(7000 + t);
    auto M = random_instance(3, 3, Field::kReal, rng);
    const double real_opt = discrete_opt_real(M).value;
    M.field = Field::kComplex;
    CHECK(discrete_opt_complex(M, 16, 3).value >= real_opt - 1e-9);
  }
}

TEST_CASE("relaxation on pinned instances") {
  const auto one = relaxation_opt(make_real(1, 1, {1.0}), 100, 4, 5);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-9));

  const auto chsh =
      relaxation_opt(make_real(2, 2, {1.0, 1.0, 1.0, -1.0}), 300, 8, 5);
  CHECK(chsh.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-7));

  const auto eye = relaxation_opt(make_real(2, 2, {1.0, 0.0, 0.0, 1.0}), 100, 4, 5);
  CHECK(eye.value == doctest::Approx(2.0).epsilon(1e-9));

  // unit columns, phase-normalised objective
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(chsh.xs.col(i).norm() - 1.0) < 1e-12);
    CHECK(std::abs(chsh.ys.col(i).norm() - 1.0) < 1e-12);
  }
  const Complex obj = relaxation_objective(make_real(2, 2, {1.0, 1.0, 1.0, -1.0}), chsh);
  CHECK(obj.real() >= 0.0);
  CHECK(std::abs(obj.imag()) < 1e-9);
}

TEST_CASE("relaxation cross-checked against a 2D angle grid") {
  // y_j on the unit circle; closed-form x step gives
  // value(b1,b2) = sum_i ||sum_j M_ij y_j||.
  const auto M = make_real(2, 2, {1.0, 1.0, 1.0, -1.0});
  double grid_best = 0.0;
  const int steps = 720;
  for (int g1 = 0; g1 < steps; ++g1) {
    for (int g2 = 0; g2 < steps; ++g2) {
      Eigen::Vector2d y1{std::cos(2 * pi * g1 / steps), std::sin(2 * pi * g1 / steps)};
      Eigen::Vector2d y2{std::cos(2 * pi * g2 / steps), std::sin(2 * pi * g2 / steps)};
      double v = (y1 + y2).norm() + (y1 - y2).norm();
      grid_best = std::max(grid_best, v);
    }
  }
  CHECK(std::abs(grid_best - 2.0 * std::sqrt(2.0)) < 1e-4);
  const auto relax = relaxation_opt(M, 300, 8, 5);
  CHECK(relax.value >= grid_best - 1e-4);
}

TEST_CASE("zero rows and columns leave the ascent inert") {
  // the y-update for a zero column is degenerate; the previous (random)
  // vector is kept and the value matches the live submatrix
  const auto M = make_real(2, 2, {1.0, 0.0, 0.0, 0.0});
  const auto a = relaxation_opt(M, 200, 8, 3);
  CHECK(a.value == doctest::Approx(1.0).epsilon(1e-9));
  for (int j = 0; j < 2; ++j)
    CHECK(std::abs(a.ys.col(j).norm() - 1.0) < 1e-12);
}

TEST_CASE("ascent value is nondecreasing in the sweep budget") {
  Rng rng(4242);
  const auto M = random_instance(4, 4, Field::kComplex, rng);
  double prev = 0.0;
  for (int iters : {1, 2, 3, 5, 8, 20}) {
    const double v = relaxation_opt(M, iters, 4, 11).value;
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("sandwich: discrete <= relaxation <= K * discrete") {
  for (Field field : {Field::kReal, Field::kComplex}) {
    const double K = field == Field::kReal ? constants::krivine_constant()
                                           : constants::haagerup_constant();
    for (int t = 0; t < 50; ++t) {
      Rng rng(500 + t);
      const int sz = t % 2 == 0 ? 3 : 4;
      const auto M = random_instance(sz, sz, field, rng);
      const double d = field == Field::kReal
                           ? discrete_opt_real(M).value
                           : discrete_opt_complex(M, 16, 77 + t).value;
      const double r = relaxation_opt(M, 20000, 16, 33 + t).value;
      CHECK(d <= r + 1e-9);
      CHECK(r <= K * d + 1e-6);
    }
  }
}

TEST_CASE("boundary attainment via coordinate sign improvement") {
  for (int t = 0; t < 100; ++t) {
    Rng rng(9000 + t);
    const int m = 2 + static_cast<int>(rng.next_u64() % 3);
    const int n = 2 + static_cast<int>(rng.next_u64() % 3);
    const auto M = random_instance(m, n, Field::kReal, rng);
    const Eigen::MatrixXd A = M.entries.real();
    Eigen::VectorXd delta(n);
    for (int j = 0; j < n; ++j) delta[j] = 2.0 * rng.next_uniform() - 1.0;
    const double initial = (A * delta).cwiseAbs().sum();
    double current = initial;
    for (int j = 0; j < n; ++j) {
      double best_val = -1.0, best_sign = 1.0;
      for (double s : {1.0, -1.0}) {
        Eigen::VectorXd d2 = delta;
        d2[j] = s;
        const double v = (A * d2).cwiseAbs().sum();
        if (v > best_val) {
          best_val = v;
          best_sign = s;
        }
      }
      delta[j] = best_sign;
      CHECK(best_val >= current - 1e-12);
      current = best_val;
    }
    CHECK(current >= initial - 1e-12);
    for (int j = 0; j < n; ++j) CHECK(std::abs(std::abs(delta[j]) - 1.0) < 1e-15);
  }
}

TEST_CASE("scale equivariance") {
  Rng rng(321);
  const auto M = random_instance(3, 3, Field::kReal, rng);
  ProblemInstance M2 = M;
  M2.entries *= 2.0;

  const auto d1 = discrete_opt_real(M), d2 = discrete_opt_real(M2);
  CHECK(d2.value == doctest::Approx(2.0 * d1.value).epsilon(1e-12));
  CHECK((d1.delta - d2.delta).norm() == 0.0);

  const double r1 = relaxation_opt(M, 200, 8, 9).value;
  const double r2 = relaxation_opt(M2, 200, 8, 9).value;
  CHECK(r2 == doctest::Approx(2.0 * r1).epsilon(1e-9));

  auto Mc = random_instance(3, 3, Field::kComplex, rng);
  ProblemInstance Mc2 = Mc;
  Mc2.entries *= 3.0;
  const double c1 = discrete_opt_complex(Mc, 8, 5).value;
  const double c2 = discrete_opt_complex(Mc2, 8, 5).value;
  CHECK(c2 == doctest::Approx(3.0 * c1).epsilon(1e-9));
}

TEST_CASE("corollary bound") {
  // tight case: M = [[1]], x = y
  ProblemInstance one = make_real(1, 1, {1.0});
  UnitVectorAssignment a;
  a.field = Field::kReal;
  a.xs = Matrix::Ones(1, 1);
  a.ys = Matrix::Ones(1, 1);
  a.value = 1.0;
  CHECK(verify_corollary(one, a) == doctest::Approx(pi / 2.0).epsilon(1e-12));

  ProblemInstance zero = make_real(1, 1, {0.0});
  CHECK_THROWS_AS(verify_corollary(zero, a), std::invalid_argument);

  // complex tight case: H(1) = 1
  ProblemInstance cone;
  cone.field = Field::kComplex;
  cone.entries = Matrix::Ones(1, 1);
  UnitVectorAssignment ca = a;
  ca.field = Field::kComplex;
  CHECK(verify_corollary(cone, ca) == doctest::Approx(1.0).epsilon(1e-9));

  for (int t = 0; t < 20; ++t) {
    Rng rng(600 + t);
    const auto M = random_instance(3, 3, Field::kReal, rng);
    const auto relax = relaxation_opt(M, 200, 8, rng.next_u64());
    CHECK(verify_corollary(M, relax) <= pi / 2.0 + 1e-9);
  }
}

TEST_CASE("corollary bound on a rank-one-tight instance") {
  // The ascent drives every pair collinear here and one coefficient enters
  // with opposite sign; arcsin evaluated a few ulps inside +-1 once pushed
  // the normalized sum 1.5e-9 past pi/2.
  const auto M = make_real(
      2, 2,
      {-1.2044053610991592, -1.6476136763213698, -1.4099741721711376,
       0.21098552410150698});
  const auto relax = relaxation_opt(M, 20000, 16, 5ull);
  const double v = verify_corollary(M, relax);
  CHECK(v <= pi / 2.0 + 1e-9);
  CHECK(v >= pi / 2.0 - 1e-6);  // the bound is attained on this instance
}
