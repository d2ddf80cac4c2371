#pragma once

#include <cstddef>
#include <vector>

#include "disclab/matrix.hpp"

namespace disclab {

struct SignColoring {
  std::vector<int> signs;  // entries in {-1, +1}
  double value = 0.0;      // ||A signs||_inf, recomputed from the signs
};

/// ||A x||_inf for a sign vector, computed fresh.
double disc_value(const Matrix& a, const std::vector<int>& signs);

/// Exact discrepancy by Gray-code enumeration over 2^(n-1) sign vectors
/// (x_1 fixed to +1 by symmetry). Ties broken by first-found in Gray order;
/// when the walk runs on several threads the result is identical to the
/// serial walk. Rejects n > limit_n.
SignColoring disc_brute(const Matrix& a, std::size_t limit_n = 26);

}  // namespace disclab
