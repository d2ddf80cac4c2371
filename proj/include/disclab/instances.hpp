#pragma once

#include <cstdint>

#include "disclab/matrix.hpp"

namespace disclab {

/// i.i.d. standard Gaussian entries, every column rescaled to unit norm.
Matrix gen_gaussian_unit(std::size_t m, std::size_t n, std::uint64_t seed);

/// 0-1 incidence matrix (rows = edges, columns = vertices) where every vertex
/// lies in exactly min(t, n_edges) edges, sampled uniformly per vertex.
/// scaled divides by sqrt(t) so columns have l2 norm <= 1.
Matrix gen_beck_fiala(std::size_t n_vertices, std::size_t n_edges, std::size_t t,
                      std::uint64_t seed, bool scaled);

/// Incidence matrix of all arithmetic progressions {a, a+d, ...} inside [N]
/// with difference d <= sqrt(N); columns are the points 1..N. The family is
/// fully determined by N. scaled divides column j by sqrt(its degree).
Matrix gen_arithmetic_progressions(std::size_t n_points, bool scaled = false);

/// The 1x1 matrix (1), the tight instance for the unit-column bound.
Matrix gen_tight();

}  // namespace disclab
