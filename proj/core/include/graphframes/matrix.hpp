#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace graphframes {

// Dense real matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// Shapes are validated; a mismatch throws InputError.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Matrix-vector product a * x.
std::vector<double> matvec(const Matrix& a, std::span<const double> x);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double max_abs(std::span<const double> a);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

// Square matrix that is symmetric by construction: writes go through set(),
// which mirrors the entry, and from_dense() rejects any asymmetry outright
// rather than symmetrizing, so no tolerance is involved.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t order) : dense_(order, order) {}

  static SymmetricMatrix from_dense(Matrix m);

  std::size_t order() const { return dense_.rows(); }

  double operator()(std::size_t i, std::size_t j) const { return dense_(i, j); }

  void set(std::size_t i, std::size_t j, double value) {
    dense_(i, j) = value;
    dense_(j, i) = value;
  }

  const Matrix& dense() const { return dense_; }

  bool operator==(const SymmetricMatrix&) const = default;

 private:
  Matrix dense_;
};

}  // namespace graphframes
