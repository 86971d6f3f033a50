#pragma once

// Covariance functions (squared-exponential, Bayesian linear, white noise)
// and the three covariance matrices used for exact GP inference:
// training (with noise), training-vs-test cross covariance, and test.

#include <array>
#include <span>
#include <vector>

#include "bladewatch/linalg.hpp"

namespace bladewatch {

/// {sigma_f, lambda, sigma_0, sigma_n}, stored as natural logarithms so that
/// optimizers can move freely while every parameter stays positive.
class Hyperparameters {
 public:
  enum Index : std::size_t { signal = 0, length_scale = 1, linear = 2, noise = 3 };
  static constexpr std::size_t kCount = 4;

  Hyperparameters() = default;

  /// Throws ValidationError unless every value is finite and > 0.
  static Hyperparameters from_linear(double sigma_f, double lambda, double sigma_0,
                                     double sigma_n);
  /// Throws ValidationError unless every value is finite.
  static Hyperparameters from_log(std::span<const double> log_values);

  double sigma_f() const;
  double lambda() const;
  double sigma_0() const;
  double sigma_n() const;

  const std::array<double, kCount>& log_values() const { return log_; }

  friend bool operator==(const Hyperparameters&, const Hyperparameters&) = default;

 private:
  std::array<double, kCount> log_{};
};

/// The prior mean function; identically zero.
inline double zero_mean(std::span<const double> /*x*/) { return 0.0; }

/// sigma_f^2 * exp(-|xp - xq|^2 / (2 lambda^2))
double squared_exponential(std::span<const double> xp, std::span<const double> xq,
                           double sigma_f, double lambda);

/// sigma_0^2 * (xp . xq)
double linear_covariance(std::span<const double> xp, std::span<const double> xq,
                         double sigma_0);

/// sigma_n^2 on matching training indices, else 0.
inline double noise_covariance(std::size_t i, std::size_t j, double sigma_n) {
  return i == j ? sigma_n * sigma_n : 0.0;
}

enum class CovarianceKind { train, cross, test };

struct CovarianceMatrix {
  linalg::Matrix entries;
  CovarianceKind kind;
};

/// K_theta: squared-exponential + linear + noise over the training inputs
/// (N x d). Exactly symmetric.
CovarianceMatrix build_train_cov(const linalg::Matrix& x, const Hyperparameters& hp);

/// K_*: squared-exponential + linear between training rows and test rows
/// (N x M). No noise term.
CovarianceMatrix build_cross_cov(const linalg::Matrix& x, const linalg::Matrix& x_test,
                                 const Hyperparameters& hp);

/// K_**: squared-exponential + linear over the test inputs (M x M).
CovarianceMatrix build_test_cov(const linalg::Matrix& x_test, const Hyperparameters& hp);

/// diag(K_**) = sigma_f^2 + sigma_0^2 |x*|^2, without forming the matrix.
std::vector<double> test_cov_diagonal(const linalg::Matrix& x_test, const Hyperparameters& hp);

}  // namespace bladewatch
