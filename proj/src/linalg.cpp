#include "disclab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace disclab {

namespace {

double offdiag_sum(const std::vector<double>& a, std::size_t n) {
  double sm = 0.0;
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) sm += std::fabs(a[p * n + q]);
  return sm;
}

}  // namespace

EigenDecomposition eig_sym(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  Matrix q = Matrix::identity(n);

  const int max_sweeps = 100;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    const double sm = offdiag_sum(a, n);
    if (sm == 0.0) break;
    // Threshold sweeps: skip tiny pivots early on, rotate everything later.
    const double tresh = sweep < 3 ? 0.2 * sm / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t col = p + 1; col < n; ++col) {
        double& apq = a[p * n + col];
        const double g = 100.0 * std::fabs(apq);
        if (sweep > 3 && std::fabs(a[p * n + p]) + g == std::fabs(a[p * n + p]) &&
            std::fabs(a[col * n + col]) + g == std::fabs(a[col * n + col])) {
          apq = 0.0;
          a[col * n + p] = 0.0;
          continue;
        }
        if (std::fabs(apq) <= tresh) continue;
        const double h = a[col * n + col] - a[p * n + p];
        double t;
        if (std::fabs(h) + g == std::fabs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double tapq = t * apq;
        a[p * n + p] -= tapq;
        a[col * n + col] += tapq;
        apq = 0.0;
        a[col * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != col) {
            const double arp = a[r * n + p];
            const double arq = a[r * n + col];
            a[r * n + p] = arp - s * (arq + tau * arp);
            a[p * n + r] = a[r * n + p];
            a[r * n + col] = arq + s * (arp - tau * arq);
            a[col * n + r] = a[r * n + col];
          }
          const double qrp = q(r, p);
          const double qrq = q(r, col);
          q(r, p) = qrp - s * (qrq + tau * qrp);
          q(r, col) = qrq + s * (qrp - tau * qrq);
        }
      }
    }
  }

  if (sweep >= max_sweeps) {
    throw NumericalError("eig_sym: Jacobi sweep cap reached, off-diagonal residual " +
                         std::to_string(offdiag_sum(a, n)));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a[order[k] * n + order[k]];
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = q(r, order[k]);
  }

  // Reconstruction contract.
  const double scale = 1.0 + m.max_abs();
  double resid = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += out.vectors(i, k) * out.values[k] * out.vectors(j, k);
      resid = std::max(resid, std::fabs(s - m(i, j)));
    }
  }
  if (resid > 1e-9 * scale) {
    throw NumericalError("eig_sym: reconstruction residual " + std::to_string(resid) +
                         " exceeds 1e-9 * " + std::to_string(scale));
  }
  return out;
}

std::pair<double, std::vector<double>> min_eigenvalue(const SymMatrix& m) {
  const EigenDecomposition ed = eig_sym(m);
  const std::size_t n = m.dim();
  const double lam = ed.values[n - 1];
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = ed.vectors(i, n - 1);

  double resid = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
    const double r = s - lam * v[i];
    resid += r * r;
  }
  resid = std::sqrt(resid);
  if (resid > 1e-8 * (1.0 + m.max_abs())) {
    throw NumericalError("min_eigenvalue: eigenpair residual " + std::to_string(resid));
  }
  return {lam, v};
}

bool is_psd(const SymMatrix& m, double tol) {
  if (tol < 0.0) throw std::invalid_argument("is_psd: tol must be >= 0");
  return min_eigenvalue(m).first >= -tol;
}

double det_psd(const SymMatrix& m) {
  const EigenDecomposition ed = eig_sym(m);
  if (ed.values.back() < -1e-8) {
    throw std::invalid_argument("det_psd: matrix is not PSD (min eigenvalue " +
                                std::to_string(ed.values.back()) + ")");
  }
  double det = 1.0;
  for (double v : ed.values) det *= std::max(v, 0.0);
  return det;
}

Matrix orthonormal_range_basis(const Matrix& a, double rank_rel_tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < 1) throw std::invalid_argument("orthonormal_range_basis: empty matrix");

  // Largest singular value from the smaller Gram matrix.
  double sigma_max = 0.0;
  {
    const SymMatrix g = (n <= m) ? gram(a) : gram(a.transpose());
    const EigenDecomposition ed = eig_sym(g);
    sigma_max = std::sqrt(std::max(ed.values.front(), 0.0));
  }
  const double thresh = rank_rel_tol * sigma_max;

  std::vector<std::vector<double>> basis;
  std::vector<double> v(m);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) v[i] = a(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) {
        double dot = 0.0;
        for (std::size_t i = 0; i < m; ++i) dot += u[i] * v[i];
        for (std::size_t i = 0; i < m; ++i) v[i] -= dot * u[i];
      }
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > thresh && norm > 0.0) {
      std::vector<double> u(m);
      for (std::size_t i = 0; i < m; ++i) u[i] = v[i] / norm;
      basis.push_back(std::move(u));
    }
  }

  Matrix out(m, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < m; ++i) out(i, k) = basis[k][i];
  return out;
}

double det_lu(const Matrix& b) {
  if (b.rows() != b.cols()) throw std::invalid_argument("det_lu: matrix not square");
  const std::size_t n = b.rows();
  std::vector<double> a(b.entries());
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(a[i * n + k]) > std::fabs(a[piv * n + k])) piv = i;
    if (a[piv * n + k] == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      det = -det;
    }
    det *= a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      if (f == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      a[i * n + k] = 0.0;
    }
  }
  return det;
}

std::pair<double, bool> hadamard_bound_check(const Matrix& b) {
  if (b.rows() != b.cols()) {
    throw std::invalid_argument("hadamard_bound_check: matrix not square");
  }
  const double d = std::fabs(det_lu(b));
  double bound = 1.0;
  for (std::size_t j = 0; j < b.cols(); ++j) bound *= b.col_norm(j);
  return {d, d <= bound + 1e-9};
}

bool psd_probe(const SymMatrix& m, double tol) {
  const std::size_t n = m.dim();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(a[i * n + i]));
  const double thresh = tol + 64.0 * static_cast<double>(n) * 2.220446049250313e-16 * scale;

  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[perm[i] * n + perm[j]]; };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (at(i, i) > at(piv, piv)) piv = i;
    std::swap(perm[k], perm[piv]);
    const double d = at(k, k);
    if (d <= thresh) {
      // Remaining block is numerically zero-or-negative on the diagonal;
      // PSD iff nothing dips below -thresh.
      for (std::size_t i = k; i < n; ++i)
        if (at(i, i) < -thresh) return false;
      return true;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = at(i, k) / d;
      for (std::size_t j = k + 1; j <= i; ++j) {
        at(i, j) -= f * at(k, j);
        at(j, i) = at(i, j);
      }
    }
  }
  return true;
}

SymMatrix weighted_gram(const Matrix& a, const std::vector<double>& p) {
  if (p.size() != a.rows()) throw std::invalid_argument("weighted_gram: weight length mismatch");
  const std::size_t n = a.cols();
  SymMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < a.rows(); ++i) s += p[i] * a(i, j) * a(i, k);
      out.set(j, k, s);
    }
  }
  return out;
}

SymMatrix gram(const Matrix& b) {
  const std::size_t n = b.cols();
  SymMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < b.rows(); ++i) s += b(i, j) * b(i, k);
      out.set(j, k, s);
    }
  }
  return out;
}

SymMatrix compress(const SymMatrix& m, const Matrix& u) {
  if (u.rows() != m.dim()) throw std::invalid_argument("compress: dimension mismatch");
  const std::size_t n = m.dim();
  const std::size_t k = u.cols();
  Matrix mu(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * u(j, c);
      mu(i, c) = s;
    }
  SymMatrix out(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = r; c < k; ++c) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += u(i, r) * mu(i, c);
      out.set(r, c, s);
    }
  return out;
}

}  // namespace disclab
