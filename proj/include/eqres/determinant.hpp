#pragma once

#include <cstddef>
#include <vector>

#include "eqres/polynomial.hpp"

namespace eqres {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Rows and columns listed in `keep`, in that order.
  Matrix submatrix(const std::vector<std::size_t>& keep) const {
    std::vector<T> data;
    data.reserve(keep.size() * keep.size());
    for (std::size_t i : keep)
      for (std::size_t j : keep) data.push_back((*this)(i, j));
    return Matrix(keep.size(), keep.size(), std::move(data));
  }

 private:
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

/// Elimination kernel. Serial is the reference; OpenMP splits each Bareiss
/// step across rows and must produce identical results.
enum class Kernel { Serial, OpenMP };

/// Fraction-free (Bareiss) determinant over Z. The matrix is consumed.
Integer bareiss_determinant(Matrix<Integer> m, Kernel kernel = Kernel::OpenMP);

/// Fraction-free determinant over Q[parameters]. All entries share one context.
Polynomial bareiss_determinant(Matrix<Polynomial> m, Kernel kernel = Kernel::OpenMP);

/// Determinant over Q: rows are scaled to integers first and the scaling is
/// divided back out.
Scalar determinant(const Matrix<Scalar>& m, Kernel kernel = Kernel::OpenMP);

/// Rank of a rectangular rational matrix by fraction-free elimination.
std::size_t rank(const Matrix<Scalar>& m);

/// True when the OpenMP kernel is compiled in.
bool openmp_available() noexcept;

}  // namespace eqres
