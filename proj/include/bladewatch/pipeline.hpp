#pragma once

// End-to-end blade monitoring: load or synthesize data, clean it, train the
// three pairwise GP regressors, predict every row, and chart the residuals.
// Each stage is exposed separately so the CLI can run and resume them.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bladewatch/gp.hpp"
#include "bladewatch/monitor.hpp"
#include "bladewatch/synth.hpp"
#include "bladewatch/timeseries.hpp"

namespace bladewatch::pipeline {

inline constexpr const char* kSoftwareVersion = "1.0.0";
inline constexpr int kConfigVersion = 1;

struct InputFile {
  std::filesystem::path path;
  std::vector<ChannelSpec> channels;
};

struct InputConfig {
  /// Exactly one of synth or files is used.
  std::optional<synth::SynthConfig> synth;
  /// Aligned on their common timestamps, then merged.
  std::vector<InputFile> files;
  DuplicatePolicy duplicates = DuplicatePolicy::keep_first;
  std::string timestamp_column = "timestamp";
};

/// Either explicit [start, end] or, where unset, a run of duration_days
/// following the previous stage (or the first sample).
struct WindowSpec {
  std::optional<Timestamp> start;
  std::optional<Timestamp> end;
  double duration_days = 0.0;
};

struct PipelineConfig {
  std::uint64_t seed = 0;
  InputConfig input;
  bool clean = true;
  OutlierConfig outliers;
  /// Blade channels A, B, C and the temperature channel.
  std::vector<std::string> blades{"A", "B", "C"};
  std::string temperature = "T";
  bool use_temperature = true;
  WindowSpec training{std::nullopt, std::nullopt, 730.5};
  std::size_t n_train = 2500;
  gp::TrainConfig gp;
  std::size_t chunk_size = 1000;
  WindowSpec threshold_window{std::nullopt, std::nullopt, 182.625};
  monitor::ThresholdConfig thresholds;
  monitor::ChartConfig chart;
  monitor::DetectConfig detect;
  bool parallel_pairs = true;
  std::filesystem::path output_dir = "bladewatch-out";
  bool plots = true;
};

/// Parses a configuration document. Relative input paths are resolved
/// against base_dir. Throws ValidationError on unknown keys, wrong types or
/// out-of-range values.
PipelineConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& path);
/// The fully defaulted configuration, as echoed in the run report.
nlohmann::json config_to_json(const PipelineConfig& config);

/// Checks cross-field constraints. Throws ValidationError.
void validate(const PipelineConfig& config);

/// GP_XY predicts blade Y from blade X (and temperature).
struct Pair {
  std::string label;
  std::string input;
  std::string output;
};

/// AB, BC and CA over the configured blade names.
std::vector<Pair> pairs(const PipelineConfig& config);

struct Schedule {
  Timestamp train_start = 0;
  Timestamp train_end = 0;
  Timestamp threshold_start = 0;
  Timestamp threshold_end = 0;
};

/// Resolves the training and threshold windows against the data span.
/// Throws ValidationError when the training window does not precede the
/// threshold window.
Schedule resolve_schedule(const PipelineConfig& config, Timestamp first);

struct PreparedData {
  TimeSeriesDataset cleaned;  // raw units
  std::size_t rows_read = 0;
  std::size_t rows_dropped = 0;
  std::size_t duplicates = 0;
  std::vector<ChannelCleaning> cleaning;
  std::size_t outliers_removed = 0;
  Schedule schedule;
  TrainingSelection selection;
  NormalizationStats stats;
  TimeSeriesDataset normalized;
};

/// Acquisition, cleaning, training-row sampling and normalization.
PreparedData prepare(const PipelineConfig& config);

std::vector<std::string> model_inputs(const PipelineConfig& config, const Pair& pair);

gp::GpModel train_pair(const PreparedData& data, const PipelineConfig& config, const Pair& pair);

/// Predictions for every row of one pair, normalized units.
struct PredictionTable {
  std::string pair;
  std::vector<Timestamp> timestamps;
  std::vector<std::uint8_t> in_training;
  std::vector<double> actual;
  std::vector<double> mean;
  std::vector<double> variance;
  /// Training mean and sd of the predicted blade, for raw-unit output.
  double output_mean = 0.0;
  double output_sd = 1.0;
};

PredictionTable predict_pair(const PreparedData& data, const PipelineConfig& config,
                             const gp::GpModel& model, const Pair& pair);

struct ChartOutput {
  monitor::ResidualSeries residuals;
  monitor::ThresholdEstimate thresholds;
  monitor::ControlChartResult chart;
};

/// Residuals over the rows not used for training, thresholds from the
/// threshold window, and the X-bar chart with alarms.
ChartOutput chart_pair(const PredictionTable& table, const PipelineConfig& config,
                       const Schedule& schedule);

struct PairResult {
  Pair pair;
  gp::GpModel model;
  PredictionTable predictions;
  ChartOutput chart;
};

struct RunResult {
  PreparedData data;
  std::vector<PairResult> pairs;
  nlohmann::json report;
};

/// Receives one line per completed stage.
using Progress = std::function<void(const std::string&)>;

/// Runs every stage and, when write_outputs is set, writes all artifacts
/// to the output directory.
RunResult run_pipeline(const PipelineConfig& config, bool write_outputs = true,
                       const Progress& progress = {});

// Artifact I/O. All numbers are written in shortest round-trip form.
void write_predictions_csv(const std::filesystem::path& path, const PredictionTable& table);
PredictionTable read_predictions_csv(const std::filesystem::path& path, const std::string& pair);
nlohmann::json thresholds_to_json(const monitor::ThresholdEstimate& t);
nlohmann::json preprocess_summary(const PreparedData& data);
nlohmann::json build_report(const PipelineConfig& config, const RunResult& run);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
void write_chart(const std::filesystem::path& path, const monitor::ControlChartResult& chart);

/// File names inside the output directory.
std::filesystem::path model_path(const PipelineConfig& config, const Pair& pair);
std::filesystem::path predictions_path(const PipelineConfig& config, const Pair& pair);
std::filesystem::path chart_path(const PipelineConfig& config, const Pair& pair);
std::filesystem::path thresholds_path(const PipelineConfig& config, const Pair& pair);

}  // namespace bladewatch::pipeline
