#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "disclab/disc_oracle.hpp"
#include "disclab/instances.hpp"
#include "disclab/solver.hpp"
#include "test_util.hpp"

using namespace disclab;

namespace {

VectorColoring random_coloring(Rng& rng, std::size_t n, std::size_t d) {
  VectorColoring u;
  u.vectors = Matrix(n, d);
  for (std::size_t j = 0; j < n; ++j) {
    double norm = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      u.vectors(j, c) = rng.gaussian();
      norm += u.vectors(j, c) * u.vectors(j, c);
    }
    norm = std::sqrt(norm);
    for (std::size_t c = 0; c < d; ++c) u.vectors(j, c) /= norm;
  }
  return u;
}

}  // namespace

TEST_CASE("feasibility_residual") {
  Rng rng(1);
  VectorColoring u = random_coloring(rng, 4, 4);
  CHECK(feasibility_residual(u) <= 1e-15);

  for (std::size_t c = 0; c < 4; ++c) u.vectors(2, c) *= 1.001;
  CHECK(feasibility_residual(u) == doctest::Approx(2.001e-3).epsilon(1e-3));
}

TEST_CASE("objective equals the single row value when m = 1") {
  Rng rng(2);
  Matrix a(1, 3, {0.4, -0.2, 0.7});
  const VectorColoring u = random_coloring(rng, 3, 3);
  const std::vector<double> r = row_values(a, u);
  const auto [f, grad] = objective_and_gradient(a, u, 0.05);
  CHECK(f == r[0]);

  // gradient of r_1 w.r.t. u_j is 2 A_1j * s_1
  std::vector<double> s(3, 0.0);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t j = 0; j < 3; ++j) s[c] += a(0, j) * u.vectors(j, c);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(grad(j, c) == doctest::Approx(2.0 * a(0, j) * s[c]).epsilon(1e-12));
}

TEST_CASE("smoothed objective approaches the true max as mu shrinks") {
  Rng rng(3);
  const Matrix a = testutil::random_unit_columns(rng, 6, 5);
  const VectorColoring u = random_coloring(rng, 5, 5);
  const std::vector<double> r = row_values(a, u);
  const double true_max = *std::max_element(r.begin(), r.end());
  const auto [f, grad] = objective_and_gradient(a, u, 1e-6);
  CHECK(std::fabs(f - true_max) <= 1e-4);
  CHECK(f >= true_max);  // log-sum-exp overestimates
}

TEST_CASE("analytic gradient matches central differences") {
  Rng rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = testutil::random_matrix(rng, 5, 5);
    VectorColoring u = random_coloring(rng, 5, 5);
    const double mu = (trial % 2) ? 0.02 : 0.5;
    const auto [f, grad] = objective_and_gradient(a, u, mu);
    (void)f;

    const double h = 1e-6;
    for (std::size_t j = 0; j < 5; ++j) {
      for (std::size_t c = 0; c < 5; ++c) {
        const double keep = u.vectors(j, c);
        u.vectors(j, c) = keep + h;
        const double fp = objective_and_gradient(a, u, mu).first;
        u.vectors(j, c) = keep - h;
        const double fm = objective_and_gradient(a, u, mu).first;
        u.vectors(j, c) = keep;
        const double fd = (fp - fm) / (2.0 * h);
        CHECK(grad(j, c) == doctest::Approx(fd).epsilon(1e-5));
      }
    }
  }
}

TEST_CASE("tight 1x1 instance solves to exactly 1") {
  const PrimalSolution sol = solve_vecdisc(gen_tight());
  CHECK(sol.value == 1.0);
  CHECK(sol.converged);
  CHECK(feasibility_residual(sol.coloring) <= 2e-9);
}

TEST_CASE("identity forces value 1 at any feasible point") {
  SolverConfig cfg;
  cfg.trials = 2;
  cfg.max_iters = 200;
  const PrimalSolution sol = solve_vecdisc(Matrix::identity(4), cfg);
  CHECK(sol.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cancellation instance reaches zero") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix a(1, 2, {inv_sqrt2, inv_sqrt2});
  const PrimalSolution sol = solve_vecdisc(a);
  CHECK(sol.value <= 1e-6);
}

TEST_CASE("solution invariants: value, feasibility, row values") {
  Rng rng(5);
  const Matrix a = testutil::random_unit_columns(rng, 8, 6);
  SolverConfig cfg;
  cfg.seed = 17;
  const PrimalSolution sol = solve_vecdisc(a, cfg);

  CHECK(feasibility_residual(sol.coloring) <= 2e-9);
  const std::vector<double> fresh = row_values(a, sol.coloring);
  CHECK(fresh == sol.row_values);
  CHECK(sol.value == *std::max_element(fresh.begin(), fresh.end()));
}

TEST_CASE("determinism and seed sensitivity") {
  Rng rng(6);
  const Matrix a = testutil::random_unit_columns(rng, 7, 7);
  SolverConfig cfg;
  cfg.seed = 99;
  cfg.trials = 3;
  cfg.max_iters = 400;
  const PrimalSolution s1 = solve_vecdisc(a, cfg);
  const PrimalSolution s2 = solve_vecdisc(a, cfg);
  CHECK(s1.value == s2.value);
  CHECK(s1.coloring.vectors.entries() == s2.coloring.vectors.entries());
  CHECK(s1.iterations == s2.iterations);

  cfg.seed = 100;
  const PrimalSolution s3 = solve_vecdisc(a, cfg);
  CHECK(s1.coloring.vectors.entries() != s3.coloring.vectors.entries());
}

TEST_CASE("iteration cap reports non-convergence honestly") {
  Rng rng(7);
  const Matrix a = testutil::random_unit_columns(rng, 6, 6);
  SolverConfig cfg;
  cfg.trials = 1;
  cfg.max_iters = 4;
  const PrimalSolution sol = solve_vecdisc(a, cfg);
  CHECK_FALSE(sol.converged);
  CHECK(sol.iterations == 4);
}

TEST_CASE("relaxation never exceeds the integral optimum") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Matrix a = gen_gaussian_unit(6, 8, seed);
    SolverConfig cfg;
    cfg.seed = seed;
    const PrimalSolution sol = solve_vecdisc(a, cfg);
    const SignColoring brute = disc_brute(a);
    CHECK(std::sqrt(sol.value) <= brute.value + 1e-6);
  }
}

TEST_CASE("config validation") {
  const Matrix a = gen_tight();
  SolverConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(solve_vecdisc(a, cfg), std::invalid_argument);
  cfg = {};
  cfg.mu_final = 2.0;
  CHECK_THROWS_AS(solve_vecdisc(a, cfg), std::invalid_argument);
  cfg = {};
  cfg.dim = 0;
  CHECK_THROWS_AS(solve_vecdisc(a, cfg), std::invalid_argument);

  Matrix bad(1, 1);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(solve_vecdisc(bad), std::invalid_argument);
}
