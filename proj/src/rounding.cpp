#include "disclab/rounding.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include "disclab/rng.hpp"
#include "disclab/threads.hpp"

namespace disclab {

SignColoring round_hyperplane(const Matrix& a, const VectorColoring& u, std::size_t trials,
                              std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("round_hyperplane: trials must be >= 1");
  if (u.n() != a.cols()) {
    throw std::invalid_argument("round_hyperplane: coloring has " + std::to_string(u.n()) +
                                " vectors for " + std::to_string(a.cols()) + " columns");
  }
  const std::size_t n = u.n(), d = u.dim();

  std::vector<double> values(trials);
  std::vector<std::vector<int>> colorings(trials);
  run_jobs(trials, [&](std::size_t t) {
    Rng rng(derive_seed(seed, t));
    std::vector<double> g(d);
    for (std::size_t c = 0; c < d; ++c) g[c] = rng.gaussian();
    std::vector<int> x(n);
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      const double* uj = u.vectors.row_ptr(j);
      for (std::size_t c = 0; c < d; ++c) dot += g[c] * uj[c];
      x[j] = (dot < 0.0) ? -1 : 1;  // sign(0) := +1
    }
    values[t] = disc_value(a, x);
    colorings[t] = std::move(x);
  });

  std::size_t best = 0;
  for (std::size_t t = 1; t < trials; ++t) {
    if (values[t] < values[best]) best = t;
  }
  SignColoring out;
  out.signs = std::move(colorings[best]);
  out.value = values[best];
  return out;
}

}  // namespace disclab
