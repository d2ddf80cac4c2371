#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "disclab/instances.hpp"

using namespace disclab;

TEST_CASE("gaussian generator normalizes columns") {
  const Matrix one = gen_gaussian_unit(1, 1, 3);
  CHECK(std::fabs(one(0, 0)) == doctest::Approx(1.0).epsilon(1e-15));

  const Matrix a = gen_gaussian_unit(5, 3, 42);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(a.col_norm(j) == doctest::Approx(1.0).epsilon(1e-12));
  }

  const Matrix b = gen_gaussian_unit(5, 3, 42);
  CHECK(a.entries() == b.entries());
  const Matrix c = gen_gaussian_unit(5, 3, 43);
  CHECK(a.entries() != c.entries());

  CHECK_THROWS_AS(gen_gaussian_unit(0, 3, 1), std::invalid_argument);
}

TEST_CASE("beck-fiala generator respects the degree bound") {
  // t = 1 with as many edges as vertices: one 1 per column
  const Matrix singletons = gen_beck_fiala(6, 6, 1, 9, false);
  for (std::size_t j = 0; j < 6; ++j) {
    double colsum = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK((singletons(i, j) == 0.0 || singletons(i, j) == 1.0));
      colsum += singletons(i, j);
    }
    CHECK(colsum == 1.0);
  }

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::size_t t = 2 + seed % 3;
    const Matrix a = gen_beck_fiala(12, 9, t, seed, false);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double colsum = 0.0;
      for (std::size_t i = 0; i < a.rows(); ++i) colsum += a(i, j);
      CHECK(colsum <= static_cast<double>(t));
    }

    const Matrix scaled = gen_beck_fiala(12, 9, t, seed, true);
    for (std::size_t j = 0; j < scaled.cols(); ++j) {
      CHECK(scaled.col_norm(j) <= 1.0 + 1e-12);
    }
  }

  const Matrix rep = gen_beck_fiala(12, 9, 3, 4, false);
  const Matrix rep2 = gen_beck_fiala(12, 9, 3, 4, false);
  CHECK(rep.entries() == rep2.entries());

  CHECK_THROWS_AS(gen_beck_fiala(6, 6, 0, 1, false), std::invalid_argument);
  CHECK_THROWS_AS(gen_beck_fiala(0, 6, 1, 1, false), std::invalid_argument);
}

TEST_CASE("arithmetic progression incidence for N = 2") {
  const Matrix a = gen_arithmetic_progressions(2);
  REQUIRE(a.rows() == 3);
  REQUIRE(a.cols() == 2);
  // rows are exactly {1}, {1,2}, {2} in enumeration order
  std::set<std::vector<double>> rows;
  for (std::size_t i = 0; i < 3; ++i) rows.insert({a(i, 0), a(i, 1)});
  const std::set<std::vector<double>> expected = {{1, 0}, {1, 1}, {0, 1}};
  CHECK(rows == expected);
}

TEST_CASE("every generated AP row is a genuine arithmetic progression") {
  const Matrix a = gen_arithmetic_progressions(12);
  std::vector<std::size_t> degree(12, 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < 12; ++j) {
      CHECK((a(i, j) == 0.0 || a(i, j) == 1.0));
      if (a(i, j) == 1.0) {
        support.push_back(j);
        ++degree[j];
      }
    }
    REQUIRE(!support.empty());
    for (std::size_t k = 2; k < support.size(); ++k) {
      CHECK(support[k] - support[k - 1] == support[1] - support[0]);
    }
  }
  // column degree recount matches incidence count (nonzero everywhere: the
  // singleton {j} is always present)
  for (std::size_t j = 0; j < 12; ++j) CHECK(degree[j] >= 1);

  const Matrix scaled = gen_arithmetic_progressions(12, true);
  for (std::size_t j = 0; j < 12; ++j) {
    CHECK(scaled.col_norm(j) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("AP rows are unique") {
  const Matrix a = gen_arithmetic_progressions(9);
  std::set<std::vector<double>> seen;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<double> row(a.row_ptr(i), a.row_ptr(i) + a.cols());
    CHECK(seen.insert(row).second);
  }
}

TEST_CASE("tight instance") {
  const Matrix t = gen_tight();
  REQUIRE(t.rows() == 1);
  REQUIRE(t.cols() == 1);
  CHECK(t(0, 0) == 1.0);
}
