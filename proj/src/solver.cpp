#include "disclab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "disclab/rng.hpp"
#include "disclab/threads.hpp"

namespace disclab {

double feasibility_residual(const VectorColoring& u) {
  double worst = 0.0;
  for (std::size_t j = 0; j < u.n(); ++j) {
    double norm2 = 0.0;
    const double* row = u.vectors.row_ptr(j);
    for (std::size_t c = 0; c < u.dim(); ++c) norm2 += row[c] * row[c];
    worst = std::max(worst, std::fabs(norm2 - 1.0));
  }
  return worst;
}

namespace {

// S = A * U, accumulating over j in ascending order for every entry so the
// result is bit-identical to a per-entry dot product.
Matrix row_sums(const Matrix& a, const Matrix& u) {
  const std::size_t m = a.rows(), n = a.cols(), d = u.cols();
  Matrix s(m, d);
  for (std::size_t i = 0; i < m; ++i) {
    double* si = s.data() + i * d;
    const double* ai = a.row_ptr(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double aij = ai[j];
      if (aij == 0.0) continue;
      const double* uj = u.row_ptr(j);
      for (std::size_t c = 0; c < d; ++c) si[c] += aij * uj[c];
    }
  }
  return s;
}

std::vector<double> squared_row_norms(const Matrix& s) {
  std::vector<double> r(s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    double acc = 0.0;
    const double* si = s.row_ptr(i);
    for (std::size_t c = 0; c < s.cols(); ++c) acc += si[c] * si[c];
    r[i] = acc;
  }
  return r;
}

double log_sum_exp(const std::vector<double>& r, double mu) {
  const double hi = *std::max_element(r.begin(), r.end());
  double z = 0.0;
  for (double v : r) z += std::exp((v - hi) / mu);
  return hi + mu * std::log(z);
}

double smoothed_objective(const Matrix& a, const Matrix& u, double mu) {
  return log_sum_exp(squared_row_norms(row_sums(a, u)), mu);
}

std::pair<double, Matrix> obj_grad_impl(const Matrix& a, const Matrix& u, double mu) {
  const std::size_t m = a.rows(), n = a.cols(), d = u.cols();

  const Matrix s = row_sums(a, u);
  const std::vector<double> r = squared_row_norms(s);
  const double hi = *std::max_element(r.begin(), r.end());
  std::vector<double> q(m);
  double z = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    q[i] = std::exp((r[i] - hi) / mu);
    z += q[i];
  }
  const double f = hi + mu * std::log(z);

  // d f / d u_j = sum_i q_i/z * 2 A_ij s_i
  Matrix grad(n, d);
  for (std::size_t i = 0; i < m; ++i) {
    const double wi = 2.0 * q[i] / z;
    const double* ai = a.row_ptr(i);
    const double* si = s.row_ptr(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double coef = wi * ai[j];
      if (coef == 0.0) continue;
      double* gj = grad.data() + j * d;
      for (std::size_t c = 0; c < d; ++c) gj[c] += coef * si[c];
    }
  }
  return {f, std::move(grad)};
}

void renormalize_rows(Matrix& u) {
  for (std::size_t j = 0; j < u.rows(); ++j) {
    double* row = u.data() + j * u.cols();
    double norm2 = 0.0;
    for (std::size_t c = 0; c < u.cols(); ++c) norm2 += row[c] * row[c];
    if (norm2 < 1e-300) {  // degenerate shrink; reset to a fixed axis
      for (std::size_t c = 0; c < u.cols(); ++c) row[c] = 0.0;
      row[0] = 1.0;
      continue;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t c = 0; c < u.cols(); ++c) row[c] *= inv;
  }
}

struct TrialResult {
  Matrix u;
  double value = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  bool converged = false;
  double grad_norm = 0.0;
};

TrialResult run_trial(const Matrix& a, const SolverConfig& cfg, std::size_t d,
                      std::uint64_t trial_seed) {
  const std::size_t n = a.cols();
  Rng rng(trial_seed);
  Matrix u(n, d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t c = 0; c < d; ++c) u(j, c) = rng.gaussian();
  renormalize_rows(u);

  // mu anneals geometrically over the first part of the budget, then holds at
  // mu_final; convergence is only declared in the hold phase, where the
  // objective being minimized has stopped moving under us.
  const std::size_t anneal = std::max<std::size_t>(1, cfg.max_iters / 2);
  const double decay = (anneal > 1)
                           ? std::pow(cfg.mu_final / cfg.mu_initial, 1.0 / double(anneal - 1))
                           : 1.0;

  double step = cfg.initial_step;
  std::size_t stall = 0;
  TrialResult out;

  for (std::size_t it = 0; it < cfg.max_iters; ++it) {
    const double mu =
        (it < anneal) ? cfg.mu_initial * std::pow(decay, double(it)) : cfg.mu_final;
    const bool holding = it + 1 >= anneal;

    auto [f, grad] = obj_grad_impl(a, u, mu);

    // project onto the tangent spaces of the spheres
    double gnorm2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double* gj = grad.data() + j * d;
      const double* uj = u.row_ptr(j);
      double dot = 0.0;
      for (std::size_t c = 0; c < d; ++c) dot += gj[c] * uj[c];
      for (std::size_t c = 0; c < d; ++c) {
        gj[c] -= dot * uj[c];
        gnorm2 += gj[c] * gj[c];
      }
    }
    out.grad_norm = std::sqrt(gnorm2);
    out.iterations = it + 1;

    // first-order stationary for the current mu: no line search can move
    if (out.grad_norm <= 1e-12 * (1.0 + std::fabs(f))) {
      if (holding) {
        out.converged = true;
        break;
      }
      continue;
    }

    bool moved = false;
    while (step > 1e-14) {
      Matrix cand = u;
      for (std::size_t j = 0; j < n; ++j) {
        double* cj = cand.data() + j * d;
        const double* gj = grad.row_ptr(j);
        for (std::size_t c = 0; c < d; ++c) cj[c] -= step * gj[c];
      }
      renormalize_rows(cand);
      const double fc = smoothed_objective(a, cand, mu);
      if (fc < f) {
        const double drop = f - fc;
        u = std::move(cand);
        step = std::min(step * 1.1, 1.0);
        moved = true;
        if (holding) {
          stall = (drop <= cfg.tol * (1.0 + std::fabs(f))) ? stall + 1 : 0;
        }
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      if (holding) {
        out.converged = true;
        break;
      }
      step = cfg.initial_step;  // landscape sharpens as mu drops; try again larger
    } else if (holding && stall >= 3) {
      out.converged = true;
      break;
    }
  }

  renormalize_rows(u);
  out.u = std::move(u);
  const std::vector<double> r = squared_row_norms(row_sums(a, out.u));
  out.value = *std::max_element(r.begin(), r.end());
  return out;
}

}  // namespace

std::vector<double> row_values(const Matrix& a, const VectorColoring& u) {
  if (u.n() != a.cols()) {
    throw std::invalid_argument("row_values: coloring has " + std::to_string(u.n()) +
                                " vectors for " + std::to_string(a.cols()) + " columns");
  }
  return squared_row_norms(row_sums(a, u.vectors));
}

std::pair<double, Matrix> objective_and_gradient(const Matrix& a, const VectorColoring& u,
                                                 double mu) {
  if (mu <= 0.0) throw std::invalid_argument("objective_and_gradient: mu must be positive");
  if (u.n() != a.cols()) throw std::invalid_argument("objective_and_gradient: dimension mismatch");
  return obj_grad_impl(a, u.vectors, mu);
}

PrimalSolution solve_vecdisc(const Matrix& a, const SolverConfig& cfg) {
  a.check_finite("solve_vecdisc");
  const std::size_t n = a.cols();
  if (n == 0 || a.rows() == 0) throw std::invalid_argument("solve_vecdisc: empty matrix");
  const std::size_t d = cfg.dim.value_or(n);
  if (d == 0) throw std::invalid_argument("solve_vecdisc: dim must be >= 1");
  if (cfg.trials == 0 || cfg.max_iters == 0) {
    throw std::invalid_argument("solve_vecdisc: trials and max_iters must be >= 1");
  }
  if (!(cfg.mu_initial > 0.0) || !(cfg.mu_final > 0.0) || cfg.mu_final >= cfg.mu_initial) {
    throw std::invalid_argument("solve_vecdisc: need mu_initial > mu_final > 0");
  }
  if (!(cfg.initial_step > 0.0) || !(cfg.tol > 0.0)) {
    throw std::invalid_argument("solve_vecdisc: step and tol must be positive");
  }

  std::vector<TrialResult> trials(cfg.trials);
  std::vector<std::uint64_t> seeds(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) seeds[t] = derive_seed(cfg.seed, t);
  run_jobs(cfg.trials, [&](std::size_t t) { trials[t] = run_trial(a, cfg, d, seeds[t]); });

  std::size_t best = 0;
  for (std::size_t t = 1; t < cfg.trials; ++t) {
    if (trials[t].value < trials[best].value) best = t;
  }

  PrimalSolution sol;
  sol.coloring.vectors = std::move(trials[best].u);
  sol.row_values = row_values(a, sol.coloring);
  sol.value = *std::max_element(sol.row_values.begin(), sol.row_values.end());
  sol.iterations = trials[best].iterations;
  sol.seed = seeds[best];
  sol.converged = trials[best].converged;
  sol.grad_norm = trials[best].grad_norm;
  return sol;
}

}  // namespace disclab
