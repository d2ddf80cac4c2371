#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "disclab/matrix.hpp"

namespace disclab {

/// Assignment of one unit vector per item; row j of `vectors` holds u_j.
struct VectorColoring {
  Matrix vectors;  // n rows, dim cols

  std::size_t n() const { return vectors.rows(); }
  std::size_t dim() const { return vectors.cols(); }
};

struct SolverConfig {
  std::optional<std::size_t> dim;  // ambient dimension, default n (full rank)
  std::size_t trials = 8;
  std::size_t max_iters = 5000;
  double initial_step = 0.1;
  double mu_initial = 1.0;
  double mu_final = 1e-3;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

struct PrimalSolution {
  VectorColoring coloring;
  double value = 0.0;               // max_i row_values[i], recomputed from scratch
  std::vector<double> row_values;   // ||sum_j A_ij u_j||^2 per row
  std::size_t iterations = 0;
  std::uint64_t seed = 0;           // derived seed of the winning trial
  bool converged = false;
  double grad_norm = 0.0;           // final projected gradient norm (winning trial)
};

/// max_j | ||u_j||^2 - 1 |
double feasibility_residual(const VectorColoring& u);

/// Row values r_i = ||sum_j A_ij u_j||^2 in a fixed summation order; the
/// canonical evaluator every reported value is recomputed with.
std::vector<double> row_values(const Matrix& a, const VectorColoring& u);

/// Smoothed objective f_mu(U) = mu log sum_i exp(r_i/mu) (max-subtracted) and
/// its exact Euclidean gradient d f / d u_j as an n x dim matrix. Tangent
/// projection is the caller's job.
std::pair<double, Matrix> objective_and_gradient(const Matrix& a, const VectorColoring& u,
                                                 double mu);

/// Projected gradient descent on the product of unit spheres, best of
/// cfg.trials restarts. Deterministic given cfg.seed.
PrimalSolution solve_vecdisc(const Matrix& a, const SolverConfig& cfg = {});

}  // namespace disclab
