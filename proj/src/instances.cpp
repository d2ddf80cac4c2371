#include "disclab/instances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "disclab/rng.hpp"

namespace disclab {

Matrix gen_gaussian_unit(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m == 0 || n == 0) throw std::invalid_argument("gen_gaussian_unit: m, n must be >= 1");
  Rng rng(seed);
  Matrix a(m, n);
  std::vector<double> col(m);
  for (std::size_t j = 0; j < n; ++j) {
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        col[i] = rng.gaussian();
        norm2 += col[i] * col[i];
      }
    } while (norm2 < 1e-24);  // a zero draw is measure-zero; redraw rather than divide by it
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < m; ++i) a(i, j) = col[i] * inv;
  }
  return a;
}

Matrix gen_beck_fiala(std::size_t n_vertices, std::size_t n_edges, std::size_t t,
                      std::uint64_t seed, bool scaled) {
  if (n_vertices == 0 || n_edges == 0) {
    throw std::invalid_argument("gen_beck_fiala: need at least one vertex and one edge");
  }
  if (t == 0) throw std::invalid_argument("gen_beck_fiala: t must be >= 1");
  const std::size_t degree = std::min(t, n_edges);

  Rng rng(seed);
  Matrix a(n_edges, n_vertices);
  std::vector<std::size_t> pool(n_edges);
  for (std::size_t j = 0; j < n_vertices; ++j) {
    // Partial Fisher-Yates: the first `degree` slots become the vertex's edges.
    for (std::size_t i = 0; i < n_edges; ++i) pool[i] = i;
    for (std::size_t k = 0; k < degree; ++k) {
      const std::size_t pick = k + static_cast<std::size_t>(rng.below(n_edges - k));
      std::swap(pool[k], pool[pick]);
      a(pool[k], j) = 1.0;
    }
  }
  if (scaled) {
    const double inv = 1.0 / std::sqrt(static_cast<double>(t));
    for (std::size_t i = 0; i < n_edges; ++i)
      for (std::size_t j = 0; j < n_vertices; ++j) a(i, j) *= inv;
  }
  return a;
}

Matrix gen_arithmetic_progressions(std::size_t n_points, bool scaled) {
  if (n_points == 0) throw std::invalid_argument("gen_arithmetic_progressions: N must be >= 1");
  const std::size_t n = n_points;
  const std::size_t dmax =
      static_cast<std::size_t>(std::sqrt(static_cast<double>(n)) + 1e-9);

  // Each row is an AP {a, a+d, ..., a+(len-1)d} within [1, n]. Singletons are
  // identical across d, so they are emitted for d = 1 only.
  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t d = 1; d <= std::max<std::size_t>(dmax, 1); ++d) {
    for (std::size_t start = 1; start <= n; ++start) {
      std::vector<std::size_t> ap;
      for (std::size_t v = start; v <= n; v += d) {
        ap.push_back(v);
        if (ap.size() >= 2 || d == 1) rows.push_back(ap);
      }
    }
  }

  Matrix a(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t v : rows[i]) a(i, v - 1) = 1.0;

  if (scaled) {
    for (std::size_t j = 0; j < n; ++j) {
      double deg = 0.0;
      for (std::size_t i = 0; i < rows.size(); ++i) deg += a(i, j);
      const double inv = 1.0 / std::sqrt(deg);
      for (std::size_t i = 0; i < rows.size(); ++i) a(i, j) *= inv;
    }
  }
  return a;
}

Matrix gen_tight() {
  Matrix a(1, 1);
  a(0, 0) = 1.0;
  return a;
}

}  // namespace disclab
