#pragma once

// Exact Gaussian-process regression: marginal likelihood and its gradient,
// multi-restart training, and chunked predictive mean and variance.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bladewatch/kernels.hpp"
#include "bladewatch/linalg.hpp"
#include "bladewatch/optim.hpp"
#include "bladewatch/timeseries.hpp"

namespace bladewatch::gp {

using linalg::Matrix;
using Gradient = std::array<double, Hyperparameters::kCount>;

/// Negative log marginal likelihood of y under the GP prior with
/// hyperparameters hp. Throws NumericalError when K_theta cannot be factorized.
double nlml(const Hyperparameters& hp, const Matrix& x, std::span<const double> y);

/// d nlml / d log(phi_i) for phi = {sigma_f, lambda, sigma_0, sigma_n}.
Gradient nlml_grad(const Hyperparameters& hp, const Matrix& x, std::span<const double> y);

struct TrainConfig {
  optim::NelderMeadConfig optimizer;
  /// Total starts: the canonical one plus restarts - 1 random perturbations.
  std::size_t restarts = 5;
  /// Random starts are canonical + U(-range, range) per log-coordinate.
  double restart_range = 2.0;
  /// Worker threads for running restarts; results do not depend on it.
  std::size_t threads = 1;
};

/// log sigma_f = log lambda = log sigma_0 = 0, log sigma_n = log 0.1.
std::array<double, Hyperparameters::kCount> canonical_start();

struct RestartLog {
  std::array<double, Hyperparameters::kCount> start{};
  std::array<double, Hyperparameters::kCount> result{};
  double nlml = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct TrainingLog {
  double nlml = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  std::size_t best_restart = 0;
  bool converged = false;
  /// Relative jitter the final factorization needed.
  double jitter = 0.0;
  std::vector<RestartLog> restarts;
};

/// Where the training data came from; enough to rebuild X and y from the
/// cleaned dataset.
struct ModelSource {
  std::vector<std::string> inputs;
  std::string output;
  NormalizationStats stats;
  TrainingSelection selection;
};

/// A trained model with its factorization cached. Immutable once built, so
/// concurrent predictions on one model are safe.
class GpModel {
 public:
  /// Factorizes K_theta and solves for alpha. Throws NumericalError when the
  /// factorization fails even with jitter.
  GpModel(Matrix x, std::vector<double> y, Hyperparameters hp, TrainingLog log = {},
          ModelSource source = {});

  const Matrix& x_train() const { return x_; }
  const std::vector<double>& y_train() const { return y_; }
  const Hyperparameters& hyperparameters() const { return hp_; }
  const linalg::Cholesky& cholesky() const { return chol_; }
  const std::vector<double>& alpha() const { return alpha_; }
  const TrainingLog& training_log() const { return log_; }
  const ModelSource& source() const { return source_; }
  std::size_t input_dim() const { return x_.cols(); }

 private:
  Matrix x_;
  std::vector<double> y_;
  Hyperparameters hp_;
  linalg::Cholesky chol_;
  std::vector<double> alpha_;
  TrainingLog log_;
  ModelSource source_;
};

/// Minimizes nlml with Nelder-Mead over log-hyperparameters from every
/// start and keeps the lowest value (ties go to the earliest start).
/// Throws ValidationError for N < 2 or mismatched sizes and NumericalError
/// when no start yields a finite value.
GpModel train(Matrix x, std::vector<double> y, const TrainConfig& config, std::uint64_t seed,
              ModelSource source = {});

struct Prediction {
  std::vector<double> mean;
  std::vector<double> variance;
  /// True when sigma_n^2 is included, i.e. the variance is for y* not f*.
  bool noisy = false;
};

/// Predictive mean and variance at the rows of x_test, processed
/// chunk_size rows at a time. Chunking does not change the result.
Prediction predict(const GpModel& model, const Matrix& x_test, std::size_t chunk_size = 1000,
                   bool noisy = false);

struct Posterior {
  std::vector<double> mean;
  Matrix covariance;
};

/// Full noise-free posterior over the rows of x_eval.
Posterior posterior(const GpModel& model, const Matrix& x_eval);

/// Rows of `normalized` as an N x d input matrix over the named channels.
Matrix input_matrix(const TimeSeriesDataset& normalized, const std::vector<std::string>& inputs);

}  // namespace bladewatch::gp
