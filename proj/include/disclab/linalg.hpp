#pragma once

#include <utility>
#include <vector>

#include "disclab/matrix.hpp"

namespace disclab {

struct EigenDecomposition {
  std::vector<double> values;  // sorted non-increasing
  Matrix vectors;              // orthogonal; column k pairs with values[k]
};

/// Full symmetric eigendecomposition by cyclic Jacobi with threshold sweeps.
/// Guarantees ||Q diag(v) Q^T - M||_max <= 1e-9 (1 + ||M||_max) or throws
/// NumericalError naming the residual.
EigenDecomposition eig_sym(const SymMatrix& m);

/// Bottom eigenpair (value, unit eigenvector).
std::pair<double, std::vector<double>> min_eigenvalue(const SymMatrix& m);

/// True iff the smallest eigenvalue is >= -tol.
bool is_psd(const SymMatrix& m, double tol);

/// Determinant of a PSD matrix as the product of eigenvalues clamped at 0.
/// Rejects matrices whose bottom eigenvalue is below -1e-8.
double det_psd(const SymMatrix& m);

/// Orthonormal basis of range(A) by modified Gram-Schmidt with
/// re-orthogonalization. Columns with residual below
/// rank_rel_tol * (largest singular value of A) are dropped.
Matrix orthonormal_range_basis(const Matrix& a, double rank_rel_tol = 1e-10);

/// (|det B|, |det B| <= prod of column norms + 1e-9). B must be square.
std::pair<double, bool> hadamard_bound_check(const Matrix& b);

/// Determinant via LU with partial pivoting (any square matrix).
double det_lu(const Matrix& b);

/// Cheap PSD probe by diagonally pivoted Cholesky; equivalent to testing
/// min_eigenvalue >= -tol up to roundoff at the boundary. Used in inner
/// search loops where a full eigendecomposition per query is too slow.
bool psd_probe(const SymMatrix& m, double tol);

/// A^T diag(p) A, built symmetric.
SymMatrix weighted_gram(const Matrix& a, const std::vector<double>& p);

/// B^T B, built symmetric.
SymMatrix gram(const Matrix& b);

/// U^T M U for a compression U (dim(M) x k), built symmetric.
SymMatrix compress(const SymMatrix& m, const Matrix& u);

}  // namespace disclab
