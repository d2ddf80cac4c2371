#include "disclab/majorization.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace disclab {

namespace {

void require_same_length(const PositiveSortedSeq& x, const PositiveSortedSeq& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("sequence length mismatch: " + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()));
  }
}

}  // namespace

PositiveSortedSeq::PositiveSortedSeq(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("PositiveSortedSeq: empty");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!(values_[k] > 0.0)) {
      throw std::invalid_argument("PositiveSortedSeq: entry " + std::to_string(k) +
                                  " not strictly positive");
    }
    if (k > 0 && values_[k] > values_[k - 1]) {
      throw std::invalid_argument("PositiveSortedSeq: not non-increasing at index " +
                                  std::to_string(k));
    }
  }
}

PrefixCheck product_majorizes(const PositiveSortedSeq& x, const PositiveSortedSeq& y) {
  require_same_length(x, y);
  const std::size_t n = x.size();
  double lx = 0.0, ly = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    lx += std::log(x.values()[k]);
    ly += std::log(y.values()[k]);
    if (lx < ly - 1e-12 * static_cast<double>(k + 1)) {
      return {false, k + 1};
    }
  }
  return {true, std::nullopt};
}

PrefixCheck sum_dominates(const PositiveSortedSeq& x, const PositiveSortedSeq& y) {
  require_same_length(x, y);
  const std::size_t n = x.size();
  double sx = 0.0, sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += x.values()[k];
    sy += y.values()[k];
    if (sx < sy - 1e-12) {
      return {false, k + 1};
    }
  }
  return {true, std::nullopt};
}

std::pair<double, double> powering_bounds(const PositiveSortedSeq& x,
                                          const PositiveSortedSeq& y,
                                          unsigned long L) {
  if (L == 0) throw std::invalid_argument("powering_bounds: L must be positive");
  if (!product_majorizes(x, y).ok) {
    throw std::invalid_argument("powering_bounds: x does not product-majorize y");
  }
  const std::size_t n = x.size();
  double sx = 0.0, sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += x.values()[k];
    sy += y.values()[k];
  }
  const double lhs = static_cast<double>(L) * std::log(sx);
  const double rhs = static_cast<double>(L) * std::log(sy) - std::lgamma(static_cast<double>(n) + 1.0);
  return {lhs, rhs};
}

double minimal_majorizing_scale(const PositiveSortedSeq& x, const PositiveSortedSeq& y) {
  require_same_length(x, y);
  const std::size_t n = x.size();
  double lx = 0.0, ly = 0.0;
  double best = 0.0;  // log of the scale
  for (std::size_t k = 0; k < n; ++k) {
    lx += std::log(x.values()[k]);
    ly += std::log(y.values()[k]);
    best = std::max(best, (ly - lx) / static_cast<double>(k + 1));
  }
  return std::exp(best);
}

}  // namespace disclab
