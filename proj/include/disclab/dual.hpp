#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "disclab/matrix.hpp"

namespace disclab {

/// Lower-bound certificate: a distribution p over rows and column weights w.
/// Well-formedness (p a distribution, D >= 0) is separate from validity,
/// which additionally needs A^T P A - W PSD and sum(w) >= D^2.
struct DualCertificate {
  std::vector<double> p;
  std::vector<double> w;
  double D = 0.0;
};

/// Direction violating the containment: E_{i~p} (A z)_i^2 < sum_j w_j z_j^2.
struct Witness {
  std::vector<double> z;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// One k of the determinant chain, after sorting/permuting. section_det is
/// det of the leading k x k block of A^T P A in sorted column order; it is
/// bounded above by the p-prefix product (Hadamard + compression) and below
/// by the w-prefix product (containment restricted to the leading block).
struct ProofTraceRow {
  std::size_t k = 0;
  double section_det = 0.0;
  double p_prefix = 0.0;
  double w_prefix = 0.0;
  bool hadamard_ok = false;  // section_det <= p_prefix
  bool section_ok = false;   // section_det >= w_prefix
  bool prefix_ok = false;    // p_prefix >= w_prefix
};

struct ProofTrace {
  std::vector<double> w_sorted;  // descending, non-positive weights dropped
  std::vector<double> p_sorted;  // descending
  std::vector<ProofTraceRow> rows;
  double p_top_sum = 0.0;  // sum of the largest min(|w_sorted|, m) entries of p
  double w_sum = 0.0;      // sum of the kept weights
  bool all_ok = false;
};

/// Throws std::invalid_argument unless p is a distribution over A's rows
/// (entries >= 0, total within 1e-12 of 1) and w matches A's column count.
void check_dual_shapes(const Matrix& a, const std::vector<double>& p,
                       const std::vector<double>& w);

/// True iff min_eig(A^T P A - W) >= -tol and sum(w) >= D^2 - tol.
bool verify_certificate(const Matrix& a, const DualCertificate& cert, double tol);

/// For unit-bounded columns and sum(w) >= 1 + 1e-6, produces z with
/// lhs < rhs from the bottom of the spectrum of A^T P A - W on the
/// positive-w columns (z is zero elsewhere). Throws NumericalError if no
/// candidate achieves margin rhs - lhs >= 1e-10 * rhs.
Witness extract_witness(const Matrix& a, const std::vector<double>& p,
                        const std::vector<double>& w);

/// Numerical walk through the determinant chain under the containment
/// hypothesis (A^T P A - W PSD within 1e-8; unit-bounded columns). Throws
/// std::invalid_argument when the hypothesis fails and NumericalError if the
/// concluding bound sum(w) <= p_top_sum + 1e-6 <= 1 + 1e-6 breaks.
ProofTrace theorem_trace(const Matrix& a, const std::vector<double>& p,
                         const std::vector<double>& w);

/// Heuristic dual ascent, always returning a certificate that passes
/// verify_certificate at tol 1e-8; worst case the trivial D = 0 one.
/// Alternates greedy per-coordinate growth of w (bisection against the PSD
/// boundary) with one multiplicative-weights step on p per round.
DualCertificate search_certificate(const Matrix& a, std::size_t iters = 50,
                                   std::uint64_t seed = 0);

}  // namespace disclab
