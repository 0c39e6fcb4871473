#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc {

/// Dense row-major double-precision matrix. All numerics in this project are
/// double precision; gradient checks against central finite differences need
/// more headroom than single precision offers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
  std::span<double> row(std::size_t i) { return {row_ptr(i), cols_}; }
  std::span<const double> row(std::size_t i) const { return {row_ptr(i), cols_}; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  /// True iff every entry is finite.
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Integer labels. Class labels live in [0, K); shifted unconfident labels in
/// [K, K + muB).
using LabelVector = std::vector<int>;

/// Returns a copy of m with every row scaled to unit L2 norm.
/// Throws ZeroNormRow if a row norm is <= 1e-12; a zero embedding indicates an
/// upstream bug and is never silently clamped.
Matrix row_normalize(const Matrix& m);

/// Numerically stable log-softmax of v / temperature.
/// exp of the result sums to 1; invariant under adding a constant to v.
std::vector<double> log_softmax(std::span<const double> v, double temperature);

/// out[i][j] = dot(a_i, b_j). Requires a.cols == b.cols.
/// For unit-norm inputs entries lie in [-1, 1] up to rounding; no clipping is
/// applied so normalization bugs stay visible.
Matrix similarity_matrix(const Matrix& a, const Matrix& b);

// Dense products used by the model and losses.
Matrix matmul_nn(const Matrix& a, const Matrix& b);  // a (n x k) * b (k x m)
Matrix matmul_nt(const Matrix& a, const Matrix& b);  // a (n x k) * b^T (m x k)
Matrix matmul_tn(const Matrix& a, const Matrix& b);  // a^T (k x n) * b (k x m) -> n x m

/// Stack blocks vertically. All blocks must share a column count.
Matrix vcat(std::span<const Matrix> blocks);
Matrix vcat(std::initializer_list<Matrix> blocks);

/// Copy of rows [begin, end) of m.
Matrix row_slice(const Matrix& m, std::size_t begin, std::size_t end);

double dot(std::span<const double> a, std::span<const double> b);
double l2_norm(std::span<const double> v);

}  // namespace ssc
