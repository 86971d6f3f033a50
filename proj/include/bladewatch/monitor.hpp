#pragma once

// Residuals, X-bar control charts over calendar windows, robust control
// limits from repeated random subsets, and alarm detection.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bladewatch/gp.hpp"
#include "bladewatch/time.hpp"

namespace bladewatch::monitor {

struct ResidualSeries {
  std::string pair;
  std::vector<Timestamp> timestamps;
  /// predicted mean - actual, normalized units.
  std::vector<double> values;
};

/// Throws ValidationError when the lengths differ and DataError on
/// non-finite values.
ResidualSeries residuals(const gp::Prediction& predicted, std::span<const double> actual,
                         std::span<const Timestamp> timestamps, std::string pair = {});

struct ChartConfig {
  double window_days = 28.0;
  /// Windows holding fewer than this fraction of the nominal sample count
  /// are sparse and never alarm.
  double min_fraction = 0.1;
};

struct ChartWindow {
  Timestamp start = 0;
  /// Exclusive.
  Timestamp end = 0;
  std::size_t n_samples = 0;
  /// Mean residual; NaN for an empty window.
  double xbar = 0.0;
  bool sparse = false;
};

struct XbarChart {
  std::string pair;
  std::vector<ChartWindow> windows;
  /// Median spacing between consecutive residuals, in seconds.
  double sampling_interval = 0.0;
  double nominal_count = 0.0;
  std::size_t min_count = 0;
};

/// Consecutive windows of window_days anchored at the first timestamp,
/// covering the series. Throws ValidationError for an empty series or a
/// non-positive width.
XbarChart xbar_chart(const ResidualSeries& residuals, const ChartConfig& config = {});

struct ThresholdConfig {
  std::size_t n_subsets = 20;
  double subset_fraction = 0.25;
  std::size_t min_samples = 100;
};

struct ThresholdEstimate {
  double mu_bar = 0.0;
  double sigma_bar = 0.0;
  /// mu_bar +/- 3 sigma_bar
  double upper = 0.0;
  double lower = 0.0;
  Timestamp window_start = 0;
  Timestamp window_end = 0;
  std::size_t window_samples = 0;
  std::size_t n_subsets = 0;
  double subset_fraction = 0.0;
  std::size_t subset_size = 0;
  std::uint64_t seed = 0;
  std::vector<double> subset_means;
  std::vector<double> subset_sds;
};

/// Averages the mean and sample standard deviation of n_subsets random
/// subsets (each drawn without replacement) of the residuals with
/// timestamps in [start, end]. Throws DataError when the window holds fewer
/// than min_samples residuals and ValidationError for a bad configuration.
ThresholdEstimate robust_thresholds(const ResidualSeries& residuals, Timestamp start,
                                    Timestamp end, const ThresholdConfig& config,
                                    std::uint64_t seed);

/// How the per-sample limits are applied to window means.
enum class LimitMode {
  /// mu_bar +/- 3 sigma_bar / sqrt(n) for a window of n samples.
  standard_error,
  /// mu_bar +/- 3 sigma_bar for every window.
  per_sample,
};

const char* limit_mode_name(LimitMode mode);
/// Throws ValidationError for an unknown name.
LimitMode parse_limit_mode(const std::string& name);

struct DetectConfig {
  std::size_t persistence = 1;
  LimitMode limits = LimitMode::standard_error;
  /// Windows starting earlier never contribute to the system alarm.
  std::optional<Timestamp> monitor_from;
};

struct WindowResult {
  ChartWindow window;
  double upper = 0.0;
  double lower = 0.0;
  bool alarm = false;
};

struct ControlChartResult {
  std::string pair;
  std::vector<WindowResult> windows;
  ThresholdEstimate thresholds;
  LimitMode limits = LimitMode::standard_error;
  std::size_t persistence = 1;
  std::optional<Timestamp> first_alarm;
  std::optional<std::size_t> first_alarm_window;
};

ControlChartResult detect(const XbarChart& chart, const ThresholdEstimate& thresholds,
                          const DetectConfig& config = {});

/// Columns: window_start, window_end, n_samples, xbar, upper, lower, sparse, alarm.
void write_chart_csv(std::ostream& out, const ControlChartResult& result);
/// Reads the rows written by write_chart_csv. Throws DataError.
std::vector<WindowResult> read_chart_csv(std::istream& in);

}  // namespace bladewatch::monitor
