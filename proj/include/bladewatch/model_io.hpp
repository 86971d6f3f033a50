#pragma once

// JSON persistence for trained GP models. The document stores the
// hyperparameters, normalization statistics and training row indices; the
// training inputs are rebuilt from the dataset and the Cholesky factor is
// recomputed on load.

#include <filesystem>
#include <json.hpp>

#include "bladewatch/gp.hpp"
#include "bladewatch/timeseries.hpp"

namespace bladewatch::gp {

nlohmann::json model_to_json(const GpModel& model);

/// Rebuilds a model from its JSON description and the cleaned, raw-unit
/// dataset it was trained on. Throws ValidationError for a malformed
/// document and DataError when the dataset does not match it.
GpModel model_from_json(const nlohmann::json& doc, const TimeSeriesDataset& dataset);

void save_model(const GpModel& model, const std::filesystem::path& path);
GpModel load_model(const std::filesystem::path& path, const TimeSeriesDataset& dataset);

}  // namespace bladewatch::gp
