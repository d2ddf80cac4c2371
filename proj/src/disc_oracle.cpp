#include "disclab/disc_oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "disclab/threads.hpp"

namespace disclab {

double disc_value(const Matrix& a, const std::vector<int>& signs) {
  if (signs.size() != a.cols()) {
    throw std::invalid_argument("disc_value: coloring length " + std::to_string(signs.size()) +
                                " does not match " + std::to_string(a.cols()) + " columns");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("disc_value: signs must be +1 or -1");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    const double* row = a.row_ptr(i);
    for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * static_cast<double>(signs[j]);
    best = std::max(best, std::fabs(s));
  }
  return best;
}

namespace {

struct SegmentResult {
  double value = std::numeric_limits<double>::infinity();
  std::vector<int> signs;
};

// Walks Gray-code positions [t0, t1). Bit b of gray(t) drives the sign of
// column b+1; column 0 is pinned to +1.
SegmentResult walk_segment(const Matrix& a, const Matrix& at, std::uint64_t t0, std::uint64_t t1,
                           double guard) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<int> signs(n, 1);
  const std::uint64_t g0 = t0 ^ (t0 >> 1);
  for (std::size_t b = 0; b + 1 < n; ++b)
    if ((g0 >> b) & 1ULL) signs[b + 1] = -1;

  std::vector<double> sums(m, 0.0);
  auto refresh = [&] {
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      const double* row = a.row_ptr(i);
      for (std::size_t j = 0; j < n; ++j) s += row[j] * static_cast<double>(signs[j]);
      sums[i] = s;
    }
  };
  refresh();

  SegmentResult best;
  auto consider = [&] {
    double partial = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      partial = std::max(partial, std::fabs(sums[i]));
      if (partial >= best.value + guard) return;
    }
    const double exact = disc_value(a, signs);
    if (exact < best.value) {
      best.value = exact;
      best.signs = signs;
    }
  };

  consider();
  for (std::uint64_t t = t0 + 1; t < t1; ++t) {
    const std::size_t bit = static_cast<std::size_t>(std::countr_zero(t));
    const std::size_t col = bit + 1;
    const double delta = 2.0 * static_cast<double>(-signs[col]);
    signs[col] = -signs[col];
    const double* colv = at.row_ptr(col);
    for (std::size_t i = 0; i < m; ++i) sums[i] += delta * colv[i];
    if ((t & 0xFFFFULL) == 0) refresh();  // bound incremental drift
    consider();
  }
  return best;
}

}  // namespace

SignColoring disc_brute(const Matrix& a, std::size_t limit_n) {
  const std::size_t n = a.cols();
  if (n == 0 || a.rows() == 0) throw std::invalid_argument("disc_brute: empty matrix");
  if (n > limit_n) {
    throw std::invalid_argument("disc_brute: n = " + std::to_string(n) + " exceeds limit " +
                                std::to_string(limit_n));
  }
  a.check_finite("disc_brute");

  const Matrix at = a.transpose();
  const std::uint64_t total = 1ULL << (n - 1);

  double row_l1_max = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::fabs(a(i, j));
    row_l1_max = std::max(row_l1_max, s);
  }
  const double guard = 1e-9 * (1.0 + row_l1_max);

  // Contiguous Gray-code blocks share their top bits, so fixing the top k
  // sign bits splits the walk into 2^k independent segments.
  std::size_t k = 0;
  const std::size_t budget = thread_budget();
  while ((1ULL << (k + 1)) <= budget && (total >> (k + 1)) >= 4096) ++k;
  const std::uint64_t segments = 1ULL << k;
  const std::uint64_t seg_len = total >> k;

  std::vector<SegmentResult> results(segments);
  run_jobs(segments, [&](std::size_t s) {
    results[s] = walk_segment(a, at, s * seg_len, (s + 1) * seg_len, guard);
  });

  std::size_t winner = 0;
  for (std::size_t s = 1; s < segments; ++s) {
    if (results[s].value < results[winner].value) winner = s;
  }

  SignColoring out;
  out.signs = std::move(results[winner].signs);
  out.value = disc_value(a, out.signs);
  return out;
}

}  // namespace disclab
