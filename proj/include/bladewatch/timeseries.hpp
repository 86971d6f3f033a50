#pragma once

// Ingestion and preparation of SCADA-style multichannel records: CSV loading,
// timestamp alignment, iterative outlier removal, normalization against
// training statistics, and training-row sampling.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bladewatch/time.hpp"

namespace bladewatch {

/// Timestamped channels of equal length. Timestamps are strictly increasing
/// and every value is finite; the constructor enforces both.
class TimeSeriesDataset {
 public:
  TimeSeriesDataset() = default;
  /// Throws DataError when the invariants do not hold.
  TimeSeriesDataset(std::vector<Timestamp> timestamps, std::vector<std::string> names,
                    std::vector<std::vector<double>> channels);

  std::size_t size() const { return timestamps_.size(); }
  bool empty() const { return timestamps_.empty(); }
  std::size_t channel_count() const { return names_.size(); }

  std::span<const Timestamp> timestamps() const { return timestamps_; }
  const std::vector<std::string>& names() const { return names_; }
  std::span<const double> channel(std::size_t index) const { return channels_.at(index); }
  /// Throws DataError for an unknown name.
  std::span<const double> channel(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;
  bool has_channel(const std::string& name) const;

  /// Rows at the given (ascending) indices.
  TimeSeriesDataset select_rows(std::span<const std::size_t> rows) const;
  /// Channels by name, in the order given.
  TimeSeriesDataset select_channels(const std::vector<std::string>& names) const;

  /// Half-open row range [first, last) whose timestamps fall in [start, end].
  std::pair<std::size_t, std::size_t> rows_between(Timestamp start, Timestamp end) const;

  friend bool operator==(const TimeSeriesDataset&, const TimeSeriesDataset&) = default;

 private:
  std::vector<Timestamp> timestamps_;
  std::vector<std::string> names_;
  std::vector<std::vector<double>> channels_;
};

/// Logical channel name and the CSV header column it is read from.
struct ChannelSpec {
  std::string name;
  std::string column;
};

enum class DuplicatePolicy { keep_first, error };

struct LoadOptions {
  DuplicatePolicy duplicates = DuplicatePolicy::keep_first;
  std::string timestamp_column = "timestamp";
};

struct LoadReport {
  TimeSeriesDataset dataset;
  std::size_t rows_read = 0;
  /// Rows with a missing or unparseable timestamp or selected value.
  std::size_t dropped = 0;
  std::size_t duplicates = 0;
};

/// Reads a comma-separated file with a header row. Rows are sorted by
/// timestamp; rows that cannot be read are dropped, never interpolated.
/// Throws DataError for a missing file or column, a duplicate timestamp under
/// DuplicatePolicy::error, or when no row survives.
LoadReport load_csv(const std::string& path, const std::vector<ChannelSpec>& channels,
                    const LoadOptions& options = {});
LoadReport load_csv(std::istream& in, const std::vector<ChannelSpec>& channels,
                    const LoadOptions& options = {});

/// Writes `timestamp,<channel names...>` with shortest round-trip numbers.
void write_csv(std::ostream& out, const TimeSeriesDataset& dataset);
void write_csv(const std::string& path, const TimeSeriesDataset& dataset);

/// Restricts every dataset to the timestamps present in all of them.
/// Throws DataError when the intersection is empty.
std::vector<TimeSeriesDataset> align_common_timestamps(
    const std::vector<TimeSeriesDataset>& datasets);

/// Concatenates the channels of aligned datasets into one dataset.
TimeSeriesDataset merge_channels(const std::vector<TimeSeriesDataset>& aligned);

struct OutlierConfig {
  double k_sigma = 3.0;
  /// Stop once a pass lowers the unit-scaled standard deviation by less than this.
  double sigma_change_threshold = 0.1;
  std::size_t max_iterations = 100;
};

struct ChannelCleaning {
  std::string channel;
  std::size_t iterations = 0;
  std::size_t removed = 0;
  /// Unit-scaled standard deviation before each pass and after the last one.
  std::vector<double> sigma_trace;
};

struct OutlierReport {
  TimeSeriesDataset dataset;
  std::vector<ChannelCleaning> channels;
  std::size_t removed = 0;
};

/// Iterative k-sigma clipping, channel by channel in the order given. A row
/// flagged on any channel is removed from every channel before the next
/// channel is processed. Throws DataError when a channel has fewer than two
/// distinct values or loses every row.
OutlierReport remove_outliers(const TimeSeriesDataset& dataset,
                              const std::vector<std::string>& channels,
                              const OutlierConfig& config = {});

struct NormalizationStats {
  std::vector<std::string> names;
  std::vector<double> mean;
  /// Sample standard deviation (N - 1 divisor), strictly positive.
  std::vector<double> sd;

  std::size_t index_of(const std::string& name) const;
  double normalize(const std::string& name, double x) const;
  double denormalize(const std::string& name, double z) const;
};

struct TrainingSelection {
  Timestamp window_start = 0;
  Timestamp window_end = 0;
  /// Unique, ascending row indices inside the window.
  std::vector<std::size_t> indices;
  std::uint64_t seed = 0;
};

/// Mean and sample standard deviation of every channel over the selected rows
/// only. Throws DataError for an empty selection or a zero or non-finite
/// standard deviation.
NormalizationStats compute_stats(const TimeSeriesDataset& dataset,
                                 const TrainingSelection& selection);

/// (x - mean) / sd for every channel that has statistics; other channels are
/// copied unchanged.
TimeSeriesDataset normalize(const TimeSeriesDataset& dataset, const NormalizationStats& stats);
TimeSeriesDataset denormalize(const TimeSeriesDataset& dataset, const NormalizationStats& stats);

/// `n` distinct rows drawn uniformly without replacement from the rows with
/// timestamps in [start, end]. Deterministic for a given seed. Throws
/// DataError when the window holds fewer than `n` rows.
TrainingSelection sample_training(const TimeSeriesDataset& dataset, Timestamp start,
                                  Timestamp end, std::size_t n, std::uint64_t seed);

/// Sample mean and standard deviation (N - 1 divisor); sd is 0 for n < 2.
std::pair<double, double> mean_sd(std::span<const double> values);

}  // namespace bladewatch
