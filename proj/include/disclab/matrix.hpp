#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace disclab {

/// Thrown when an iterative kernel misses its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of finite doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<double>& entries() const { return entries_; }
  double* data() { return entries_.data(); }
  const double* data() const { return entries_.data(); }
  const double* row_ptr(std::size_t i) const { return entries_.data() + i * cols_; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;

  double max_abs() const;
  double col_norm(std::size_t j) const;
  double max_col_norm() const;

  /// Throws std::invalid_argument naming `context` if any entry is NaN/Inf.
  void check_finite(const std::string& context) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

/// Symmetric matrix; both triangles are stored but always written together,
/// so entries(i,j) == entries(j,i) holds exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {}

  /// Symmetrizes an arbitrary square matrix by copying its lower triangle.
  static SymMatrix from_lower(const Matrix& m);
  static SymMatrix diagonal(const std::vector<double>& d);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    entries_[i * dim_ + j] = v;
    entries_[j * dim_ + i] = v;
  }

  double max_abs() const;
  Matrix to_matrix() const;

  /// this - diag(w)
  SymMatrix minus_diag(const std::vector<double>& w) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> entries_;
};

}  // namespace disclab
