#pragma once

#include <cstdint>

#include "disclab/disc_oracle.hpp"
#include "disclab/matrix.hpp"
#include "disclab/solver.hpp"

namespace disclab {

/// Random hyperplane rounding: per trial draw a Gaussian g and take
/// x_j = sign(g . u_j), with sign(0) := +1; returns the best trial by
/// ||Ax||_inf (ties to the earliest trial). Deterministic given seed. Gives a
/// heuristic upper bound only; no quality guarantee is claimed.
SignColoring round_hyperplane(const Matrix& a, const VectorColoring& u, std::size_t trials,
                              std::uint64_t seed);

}  // namespace disclab
