#pragma once

// Synthetic three-blade edge-frequency data: blades A and B healthy, blade C
// deteriorating linearly after a breakpoint.

#include <cstdint>
#include <string>

#include "bladewatch/time.hpp"
#include "bladewatch/timeseries.hpp"

namespace bladewatch::synth {

struct SynthConfig {
  std::size_t n_points = 360000;
  double mu_a = 10.0;
  double sigma2 = 0.01;
  std::size_t healthy_len = 180000;
  double gradient = -1e-7;
  double intercept = 0.018;
  Timestamp sample_interval = 600;
  Timestamp start = 1262304000;  // 2010-01-01T00:00:00Z
  std::uint64_t seed = 0;
  /// Only "mt19937_64" is available; recorded so a config names its stream.
  std::string generator = "mt19937_64";
  /// Emit the constant T = 0 channel.
  bool include_temperature = true;
};

/// Throws ValidationError for an inconsistent configuration.
void validate(const SynthConfig& config);

/// Damage offset of blade C at 1-based point index i.
double damage(const SynthConfig& config, std::size_t i);

/// Channels A, B, C (and T unless disabled). Deterministic per seed.
TimeSeriesDataset generate(const SynthConfig& config);

}  // namespace bladewatch::synth
