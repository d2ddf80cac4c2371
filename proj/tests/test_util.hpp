#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "disclab/linalg.hpp"
#include "disclab/matrix.hpp"
#include "disclab/rng.hpp"

namespace testutil {

inline disclab::Matrix random_matrix(disclab::Rng& rng, std::size_t m, std::size_t n,
                                     double scale = 1.0) {
  disclab::Matrix a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = scale * rng.gaussian();
  return a;
}

inline disclab::Matrix random_unit_columns(disclab::Rng& rng, std::size_t m, std::size_t n) {
  disclab::Matrix a = random_matrix(rng, m, n);
  for (std::size_t j = 0; j < n; ++j) {
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm += a(i, j) * a(i, j);
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < m; ++i) a(i, j) /= norm;
  }
  return a;
}

inline disclab::SymMatrix random_sym(disclab::Rng& rng, std::size_t n, double scale = 1.0) {
  disclab::SymMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) s.set(i, j, scale * rng.gaussian());
  return s;
}

inline disclab::SymMatrix random_psd(disclab::Rng& rng, std::size_t n) {
  const disclab::Matrix b = random_matrix(rng, n + 2, n);
  return disclab::gram(b);
}

/// Cofactor-expansion determinant; the independent oracle for small n.
inline double cofactor_det(const disclab::Matrix& b) {
  const std::size_t n = b.rows();
  if (n == 1) return b(0, 0);
  double det = 0.0;
  double sign = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    disclab::Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t out = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, out++) = b(i, j);
      }
    }
    det += sign * b(0, c) * cofactor_det(minor);
    sign = -sign;
  }
  return det;
}

inline double cofactor_det(const disclab::SymMatrix& s) { return cofactor_det(s.to_matrix()); }

/// Orthonormal columns from Gram-Schmidt over a Gaussian draw (m x k, k <= m).
inline disclab::Matrix random_orthonormal(disclab::Rng& rng, std::size_t m, std::size_t k) {
  return disclab::orthonormal_range_basis(random_matrix(rng, m, k));
}

}  // namespace testutil
