#include "disclab/dual.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "disclab/linalg.hpp"

namespace disclab {

namespace {

constexpr double kPsdTol = 1e-8;       // validity threshold for the matrix inequality
constexpr double kWitnessRel = 1e-10;  // required relative margin rhs - lhs >= rel * rhs
constexpr double kTraceSlack = 1e-6;   // acceptance slack on the concluding sums

void check_distribution(const std::vector<double>& p) {
  double total = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw std::invalid_argument("p must be entrywise nonnegative");
    total += v;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("p must sum to 1 (got " + std::to_string(total) + ")");
  }
}

void check_unit_columns(const Matrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.col_norm(j) > 1.0 + 1e-9) {
      throw std::invalid_argument("column " + std::to_string(j) +
                                  " has norm > 1; unit-bounded columns required");
    }
  }
}

// indices of strictly positive weights, sorted by weight descending, ties by
// original index ascending
std::vector<std::size_t> positive_order(const std::vector<double>& w) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] > 0.0) idx.push_back(j);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  return idx;
}

Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& idx) {
  Matrix b(a.rows(), idx.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) b(i, k) = a(i, idx[k]);
  return b;
}

double quadratic_lhs(const Matrix& a, const std::vector<double>& p,
                     const std::vector<double>& z) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    const double* row = a.row_ptr(i);
    for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * z[j];
    acc += p[i] * s * s;
  }
  return acc;
}

}  // namespace

void check_dual_shapes(const Matrix& a, const std::vector<double>& p,
                       const std::vector<double>& w) {
  if (p.size() != a.rows()) {
    throw std::invalid_argument("p has " + std::to_string(p.size()) + " entries for " +
                                std::to_string(a.rows()) + " rows");
  }
  if (w.size() != a.cols()) {
    throw std::invalid_argument("w has " + std::to_string(w.size()) + " entries for " +
                                std::to_string(a.cols()) + " columns");
  }
  check_distribution(p);
}

bool verify_certificate(const Matrix& a, const DualCertificate& cert, double tol) {
  if (tol < 0.0) throw std::invalid_argument("verify_certificate: tol must be >= 0");
  if (!(cert.D >= 0.0)) throw std::invalid_argument("verify_certificate: D must be >= 0");
  check_dual_shapes(a, cert.p, cert.w);

  const SymMatrix m = weighted_gram(a, cert.p).minus_diag(cert.w);
  if (min_eigenvalue(m).first < -tol) return false;
  const double wsum = std::accumulate(cert.w.begin(), cert.w.end(), 0.0);
  return wsum >= cert.D * cert.D - tol;
}

Witness extract_witness(const Matrix& a, const std::vector<double>& p,
                        const std::vector<double>& w) {
  check_dual_shapes(a, p, w);
  check_unit_columns(a);
  const double wsum = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(wsum >= 1.0 + 1e-6)) {
    throw std::invalid_argument("extract_witness: sum(w) = " + std::to_string(wsum) +
                                " must exceed 1 by at least 1e-6");
  }

  const std::vector<std::size_t> idx = positive_order(w);
  const Matrix sub = select_columns(a, idx);
  std::vector<double> wsub(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) wsub[k] = w[idx[k]];

  const SymMatrix m = weighted_gram(sub, p).minus_diag(wsub);
  const EigenDecomposition eig = eig_sym(m);
  const std::size_t ns = idx.size();

  // candidate directions: bottom eigenvector, then the next one and simple
  // mixtures, in case the bottom of the spectrum is numerically degenerate
  std::vector<std::vector<double>> candidates;
  auto eigvec = [&](std::size_t col) {
    std::vector<double> v(ns);
    for (std::size_t r = 0; r < ns; ++r) v[r] = eig.vectors(r, col);
    return v;
  };
  candidates.push_back(eigvec(ns - 1));
  if (ns >= 2) {
    const std::vector<double> v1 = candidates[0];
    const std::vector<double> v2 = eigvec(ns - 2);
    candidates.push_back(v2);
    const double inv = 1.0 / std::sqrt(2.0);
    std::vector<double> plus(ns), minus(ns);
    for (std::size_t r = 0; r < ns; ++r) {
      plus[r] = (v1[r] + v2[r]) * inv;
      minus[r] = (v1[r] - v2[r]) * inv;
    }
    candidates.push_back(plus);
    candidates.push_back(minus);
  }

  Witness best;
  double best_margin = -1.0;
  for (const std::vector<double>& zc : candidates) {
    const double lhs = quadratic_lhs(sub, p, zc);
    double rhs = 0.0;
    for (std::size_t k = 0; k < ns; ++k) rhs += wsub[k] * zc[k] * zc[k];
    const double margin = (rhs > 0.0) ? (rhs - lhs) / rhs : -1.0;
    if (margin > best_margin) {
      best_margin = margin;
      best.z.assign(w.size(), 0.0);
      for (std::size_t k = 0; k < ns; ++k) best.z[idx[k]] = zc[k];
      best.lhs = lhs;
      best.rhs = rhs;
    }
  }

  if (best_margin < kWitnessRel) {
    throw NumericalError("extract_witness: no candidate had margin; min eigenvalue = " +
                         std::to_string(eig.values.back()));
  }
  return best;
}

ProofTrace theorem_trace(const Matrix& a, const std::vector<double>& p,
                         const std::vector<double>& w) {
  check_dual_shapes(a, p, w);
  check_unit_columns(a);

  const SymMatrix full = weighted_gram(a, p).minus_diag(w);
  const double bottom = min_eigenvalue(full).first;
  if (bottom < -kPsdTol) {
    throw std::invalid_argument("theorem_trace: containment fails (min eigenvalue " +
                                std::to_string(bottom) + "); extract a witness instead");
  }

  ProofTrace trace;
  const std::vector<std::size_t> idx = positive_order(w);
  trace.w_sorted.reserve(idx.size());
  for (std::size_t j : idx) trace.w_sorted.push_back(w[j]);
  trace.p_sorted = p;
  std::stable_sort(trace.p_sorted.begin(), trace.p_sorted.end(), std::greater<double>());

  const Matrix sorted_a = select_columns(a, idx);
  const SymMatrix g = weighted_gram(sorted_a, p);

  const std::size_t ns = idx.size();
  double p_prefix = 1.0, w_prefix = 1.0;
  for (std::size_t k = 1; k <= ns; ++k) {
    SymMatrix section(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c <= r; ++c) section.set(r, c, g(r, c));
    ProofTraceRow row;
    row.k = k;
    row.section_det = det_psd(section);
    p_prefix *= (k <= trace.p_sorted.size()) ? trace.p_sorted[k - 1] : 0.0;
    w_prefix *= trace.w_sorted[k - 1];
    row.p_prefix = p_prefix;
    row.w_prefix = w_prefix;
    // tolerances chosen so hadamard_ok && section_ok implies prefix_ok
    row.hadamard_ok = row.section_det <= p_prefix * (1.0 + 1e-6) + 1e-15;
    row.section_ok = row.section_det >= w_prefix * (1.0 - 1e-6) - 1e-15;
    row.prefix_ok = p_prefix >= w_prefix * (1.0 - 3e-6) - 3e-15;
    trace.rows.push_back(row);
  }

  const std::size_t top = std::min(ns, trace.p_sorted.size());
  trace.p_top_sum = std::accumulate(trace.p_sorted.begin(), trace.p_sorted.begin() + top, 0.0);
  trace.w_sum = std::accumulate(trace.w_sorted.begin(), trace.w_sorted.end(), 0.0);

  if (trace.w_sum > trace.p_top_sum + kTraceSlack || trace.p_top_sum > 1.0 + kTraceSlack) {
    throw NumericalError("theorem_trace: concluding bound failed: sum(w) = " +
                         std::to_string(trace.w_sum) + ", top-p sum = " +
                         std::to_string(trace.p_top_sum));
  }

  trace.all_ok = true;
  for (const ProofTraceRow& row : trace.rows) {
    trace.all_ok = trace.all_ok && row.hadamard_ok && row.section_ok && row.prefix_ok;
  }
  return trace;
}

DualCertificate search_certificate(const Matrix& a, std::size_t iters, std::uint64_t seed) {
  (void)seed;  // the ascent below is deterministic; the parameter is interface plumbing
  a.check_finite("search_certificate");
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0 || n == 0) throw std::invalid_argument("search_certificate: empty matrix");

  DualCertificate cert;
  cert.p.assign(m, 1.0 / static_cast<double>(m));
  cert.w.assign(n, 0.0);

  // Best feasible iterate seen so far. The p step can leave a saturated w
  // outside the PSD cone for good (w never shrinks during the rounds), and the
  // end-of-run repair would then surrender mass; returning the snapshot keeps
  // e.g. the identity at sum(w) = 1 instead of whatever the last round left.
  std::vector<double> best_p = cert.p;
  std::vector<double> best_w = cert.w;
  double best_sum = 0.0;

  auto current = [&] { return weighted_gram(a, cert.p).minus_diag(cert.w); };

  for (std::size_t round = 0; round < iters; ++round) {
    // (a) greedy coordinate ascent on w against the PSD boundary
    SymMatrix mtx = current();
    for (std::size_t j = 0; j < n; ++j) {
      const double gjj = mtx(j, j) + cert.w[j];  // (A^T P A)_jj
      double lo = 0.0, hi = gjj - cert.w[j] + 1.0;
      for (int step = 0; step < 30; ++step) {
        const double mid = 0.5 * (lo + hi);
        SymMatrix probe = mtx;
        probe.set(j, j, mtx(j, j) - mid);
        if (psd_probe(probe, 1e-9)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      if (lo > 0.0) {
        cert.w[j] += lo;
        mtx.set(j, j, mtx(j, j) - lo);
      }
    }

    // (b) one multiplicative-weights step on p toward raising the bottom
    // eigenvalue: d lambda_min / d p_i = (A v)_i^2 for the bottom eigenvector v
    const auto [lambda, v] = min_eigenvalue(mtx);
    if (lambda >= -0.5 * kPsdTol) {
      const double sum = std::accumulate(cert.w.begin(), cert.w.end(), 0.0);
      if (sum > best_sum) {
        best_sum = sum;
        best_p = cert.p;
        best_w = cert.w;
      }
    }
    std::vector<double> gain(m, 0.0);
    double gain_max = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      const double* row = a.row_ptr(i);
      for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
      gain[i] = s * s;
      gain_max = std::max(gain_max, gain[i]);
    }
    double z = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      cert.p[i] *= std::exp(0.1 * (gain[i] - gain_max));
      z += cert.p[i];
    }
    for (std::size_t i = 0; i < m; ++i) cert.p[i] /= z;
  }

  // Re-verify; if roundoff pushed the matrix below the PSD tolerance, shrink w
  // toward the feasible cone by bisection on a global scale factor.
  const SymMatrix pa = weighted_gram(a, cert.p);
  if (min_eigenvalue(pa.minus_diag(cert.w)).first < -0.5 * kPsdTol) {
    std::vector<double> scaled(n);
    double lo = 0.0, hi = 1.0;
    for (int step = 0; step < 60; ++step) {
      const double mid = 0.5 * (lo + hi);
      for (std::size_t j = 0; j < n; ++j) scaled[j] = cert.w[j] * mid;
      if (min_eigenvalue(pa.minus_diag(scaled)).first >= -0.5 * kPsdTol) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    for (std::size_t j = 0; j < n; ++j) cert.w[j] *= lo;
  }

  double wsum = std::accumulate(cert.w.begin(), cert.w.end(), 0.0);
  if (best_sum > wsum) {
    cert.p = best_p;
    cert.w = best_w;
    wsum = best_sum;
  }
  cert.D = std::sqrt(std::max(wsum, 0.0));
  if (!verify_certificate(a, cert, kPsdTol)) {
    cert.w.assign(n, 0.0);  // cannot happen unless the spectrum is pathological
    cert.D = 0.0;
  }
  return cert;
}

}  // namespace disclab
