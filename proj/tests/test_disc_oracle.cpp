#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "disclab/disc_oracle.hpp"
#include "disclab/instances.hpp"
#include "test_util.hpp"

using namespace disclab;

namespace {

// Independent oracle: plain loop over all 2^n sign vectors, no Gray code, no
// incremental updates.
double naive_disc(const Matrix& a) {
  const std::size_t n = a.cols();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    double worst_row = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        s += a(i, j) * (((mask >> j) & 1ULL) ? -1.0 : 1.0);
      }
      worst_row = std::max(worst_row, std::fabs(s));
    }
    best = std::min(best, worst_row);
  }
  return best;
}

}  // namespace

TEST_CASE("disc_value basics") {
  Matrix ones(1, 2, {1.0, 1.0});
  CHECK(disc_value(ones, {1, -1}) == 0.0);
  CHECK(disc_value(Matrix::identity(3), {1, 1, 1}) == 1.0);
  CHECK_THROWS_AS(disc_value(ones, {1}), std::invalid_argument);
  CHECK_THROWS_AS(disc_value(ones, {1, 2}), std::invalid_argument);
}

TEST_CASE("disc_value matches a per-row recomputation on random input") {
  disclab::Rng rng(9);
  const Matrix a = testutil::random_matrix(rng, 5, 8);
  std::vector<int> signs(8);
  for (int& s : signs) s = rng.below(2) ? 1 : -1;

  double expected = 0.0;
  for (std::size_t i = 0; i < 5; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < 8; ++j) sum += a(i, j) * signs[j];
    expected = std::max(expected, std::fabs(sum));
  }
  CHECK(disc_value(a, signs) == expected);
}

TEST_CASE("disc_brute on closed-form instances") {
  Matrix ones(1, 2, {1.0, 1.0});
  const SignColoring cancel = disc_brute(ones);
  CHECK(cancel.value == 0.0);
  CHECK(cancel.signs[0] == 1);  // first column pinned to +1
  CHECK(cancel.signs[1] == -1);

  CHECK(disc_brute(Matrix::identity(2)).value == 1.0);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix had(2, 2, {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2});
  CHECK(disc_brute(had).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("disc_brute equals naive enumeration on random instances") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    disclab::Rng rng(seed);
    const std::size_t m = 2 + static_cast<std::size_t>(rng.below(6));
    const std::size_t n = 2 + static_cast<std::size_t>(rng.below(11));  // n <= 12
    const Matrix a = testutil::random_matrix(rng, m, n);
    const SignColoring best = disc_brute(a);
    CHECK(best.value == naive_disc(a));
    CHECK(disc_value(a, best.signs) == best.value);  // stored value recomputes
  }
}

TEST_CASE("sign symmetry of the optimum") {
  disclab::Rng rng(123);
  const Matrix a = testutil::random_matrix(rng, 4, 9);
  const SignColoring best = disc_brute(a);
  std::vector<int> flipped(best.signs);
  for (int& s : flipped) s = -s;
  CHECK(disc_value(a, flipped) == best.value);
}

TEST_CASE("thread partitioning matches the serial walk") {
  disclab::Rng rng(55);
  const Matrix a = testutil::random_matrix(rng, 6, 14);

  setenv("DISCLAB_THREADS", "1", 1);
  const SignColoring serial = disc_brute(a);
  setenv("DISCLAB_THREADS", "4", 1);
  const SignColoring parallel = disc_brute(a);
  unsetenv("DISCLAB_THREADS");

  CHECK(serial.value == parallel.value);
  CHECK(serial.signs == parallel.signs);
}

TEST_CASE("degree-t incidence matrices meet the classical bound") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t t = 2 + seed % 3;
    const Matrix a = gen_beck_fiala(10, 8, t, seed, false);
    CHECK(disc_brute(a).value <= 2.0 * static_cast<double>(t) - 1.0);
  }
}

TEST_CASE("column limit is enforced") {
  CHECK_THROWS_AS(disc_brute(Matrix(2, 8), 7), std::invalid_argument);
  CHECK_NOTHROW(disc_brute(Matrix(2, 8), 8));
}
