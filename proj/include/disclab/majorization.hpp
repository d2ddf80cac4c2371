#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace disclab {

/// Strictly positive, non-increasing sequence x_1 >= ... >= x_n > 0.
class PositiveSortedSeq {
 public:
  explicit PositiveSortedSeq(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

struct PrefixCheck {
  bool ok = false;
  std::optional<std::size_t> failing_k;  // smallest violating prefix, 1-based
};

/// Prefix products x_1...x_k >= y_1...y_k for all k, with relative slack
/// 1e-12 per prefix (compared in log space).
PrefixCheck product_majorizes(const PositiveSortedSeq& x, const PositiveSortedSeq& y);

/// Prefix sums x_1+...+x_k >= y_1+...+y_k for all k, absolute slack 1e-12.
PrefixCheck sum_dominates(const PositiveSortedSeq& x, const PositiveSortedSeq& y);

/// The powering step of the product-to-sum lemma, in log form:
/// returns (L log sum(x), L log sum(y) - log n!); lhs >= rhs whenever
/// product_majorizes(x, y) holds. Requires that precondition.
std::pair<double, double> powering_bounds(const PositiveSortedSeq& x,
                                          const PositiveSortedSeq& y,
                                          unsigned long L);

/// Smallest c such that c*x prefix-product-majorizes y:
/// max_k (prefprod(y,k) / prefprod(x,k))^(1/k), computed in log space.
double minimal_majorizing_scale(const PositiveSortedSeq& x, const PositiveSortedSeq& y);

}  // namespace disclab
