#include "disclab/matrix.hpp"

#include <cmath>

namespace disclab {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("Matrix: entry count " + std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
  check_finite("Matrix constructor");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix multiply: dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      const double* rrow = rhs.row_ptr(k);
      double* orow = out.data() + i * out.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) orow[j] += a * rrow[j];
    }
  }
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::fabs(v));
  return m;
}

double Matrix::col_norm(std::size_t j) const {
  double s = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, j) * (*this)(i, j);
  return std::sqrt(s);
}

double Matrix::max_col_norm() const {
  double m = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) m = std::max(m, col_norm(j));
  return m;
}

void Matrix::check_finite(const std::string& context) const {
  for (double v : entries_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(context + ": non-finite entry");
    }
  }
}

SymMatrix SymMatrix::from_lower(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix::from_lower: matrix not square");
  SymMatrix s(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j) s.set(i, j, m(i, j));
  return s;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  SymMatrix s(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) s.set(i, i, d[i]);
  return s;
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::fabs(v));
  return m;
}

Matrix SymMatrix::to_matrix() const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymMatrix SymMatrix::minus_diag(const std::vector<double>& w) const {
  if (w.size() != dim_) throw std::invalid_argument("minus_diag: dimension mismatch");
  SymMatrix s = *this;
  for (std::size_t i = 0; i < dim_; ++i) s.set(i, i, (*this)(i, i) - w[i]);
  return s;
}

}  // namespace disclab
