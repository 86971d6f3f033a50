#pragma once

// Nelder-Mead downhill simplex minimizer.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace bladewatch::optim {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadConfig {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  /// Offset applied to each coordinate of x0 to build the initial simplex,
  /// and the offset used instead when that coordinate is exactly 0.
  double initial_step = 0.25;
  double zero_step = 0.00025;
  double tol_f = 1e-9;
  double tol_x = 1e-7;
  std::size_t max_evals = 10000;
};

struct SimplexState {
  /// n + 1 vertices, kept sorted by ascending value after every step.
  std::vector<std::vector<double>> vertices;
  std::vector<double> values;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;

  std::size_t best() const { return 0; }
  std::size_t worst() const { return vertices.size() - 1; }
  double value_spread() const;
  double coordinate_spread() const;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
  /// Best value after each iteration, starting with the initial simplex.
  std::vector<double> best_trace;
};

/// Minimizes f from x0. Non-finite objective values count as +inf.
/// With max_evals == 0, returns x0 unevaluated (f is NaN).
NelderMeadResult nelder_mead(const Objective& f, std::span<const double> x0,
                             const NelderMeadConfig& config = {});

}  // namespace bladewatch::optim
