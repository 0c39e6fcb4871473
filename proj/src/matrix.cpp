#include "ssc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ssc {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != m.cols_) throw DimensionMismatch("ragged initializer rows");
    std::size_t j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool Matrix::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double l2_norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

Matrix row_normalize(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double norm = l2_norm(m.row(i));
    if (norm <= 1e-12) throw ZeroNormRow(i);
    const double inv = 1.0 / norm;
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * inv;
  }
  return out;
}

std::vector<double> log_softmax(std::span<const double> v, double temperature) {
  if (!(temperature > 0.0)) throw NonPositiveTemperature(temperature);
  std::vector<double> out(v.size());
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] / temperature;
    hi = std::max(hi, out[i]);
  }
  double sum = 0.0;
  for (double x : out) sum += std::exp(x - hi);
  const double lse = hi + std::log(sum);
  for (double& x : out) x -= lse;
  return out;
}

Matrix similarity_matrix(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("similarity_matrix: column counts differ");
  return matmul_nt(a, b);
}

Matrix matmul_nn(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul_nn: inner dimensions differ");
  Matrix out(a.rows(), b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* orow = out.row_ptr(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      const double* brow = b.row_ptr(k);
      for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("matmul_nt: inner dimensions differ");
  Matrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) out(i, j) = dot(a.row(i), b.row(j));
  return out;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("matmul_tn: inner dimensions differ");
  Matrix out(a.cols(), b.cols(), 0.0);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const double* arow = a.row_ptr(k);
    const double* brow = b.row_ptr(k);
    for (std::size_t i = 0; i < a.cols(); ++i) {
      double* orow = out.row_ptr(i);
      const double aki = arow[i];
      for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aki * brow[j];
    }
  }
  return out;
}

Matrix vcat(std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const Matrix& b : blocks) {
    if (b.rows() == 0) continue;
    if (cols == 0) cols = b.cols();
    if (b.cols() != cols) throw DimensionMismatch("vcat: column counts differ");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r = 0;
  for (const Matrix& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      std::copy(b.row_ptr(i), b.row_ptr(i) + cols, out.row_ptr(r));
  return out;
}

Matrix vcat(std::initializer_list<Matrix> blocks) {
  return vcat(std::span<const Matrix>(blocks.begin(), blocks.size()));
}

Matrix row_slice(const Matrix& m, std::size_t begin, std::size_t end) {
  Matrix out(end - begin, m.cols());
  for (std::size_t i = begin; i < end; ++i)
    std::copy(m.row_ptr(i), m.row_ptr(i) + m.cols(), out.row_ptr(i - begin));
  return out;
}

}  // namespace ssc
