#pragma once

// Dense row-major matrices and the Cholesky machinery used for exact GP
// inference. Heavy loops run through the runtime-selected SIMD kernels.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace bladewatch::linalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Relative diagonal jitter tried, in order, when a factorization fails.
inline constexpr std::array<double, 3> kJitterLadder{1e-10, 1e-8, 1e-6};

/// Lower-triangular factor L with L * L^T = A + jitter * mean(diag(A)) * I.
struct Cholesky {
  Matrix lower;
  /// Relative jitter that was needed, 0 when the matrix factorized as given.
  double jitter = 0.0;

  std::size_t size() const { return lower.rows(); }
  /// log|A| = 2 * sum_i log L_ii
  double log_det() const;
};

/// Overwrites the lower triangle of `a` with its Cholesky factor and zeroes
/// the strict upper triangle. Returns false, leaving `a` partially
/// overwritten, when a non-positive or non-finite pivot is met.
bool cholesky_in_place(Matrix& a);

/// Factorizes a symmetric matrix with the jitter ladder as fallback.
/// Throws NumericalError when every rung fails.
Cholesky factorize(const Matrix& a);

/// Solves L x = b.
std::vector<double> solve_lower(const Matrix& lower, std::span<const double> b);

/// Solves L^T x = b.
std::vector<double> solve_lower_transposed(const Matrix& lower, std::span<const double> b);

/// Solves (L L^T) x = b.
std::vector<double> cholesky_solve(const Cholesky& chol, std::span<const double> b);

/// B <- L^{-1} B for a right-hand side block B (n x m).
void solve_lower_in_place(const Matrix& lower, Matrix& b);

}  // namespace bladewatch::linalg
