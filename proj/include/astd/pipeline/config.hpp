#pragma once

#include "astd/common/timestamp.hpp"
#include "astd/detectors/registry.hpp"
#include "astd/windowing/window.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace astd::pipeline {

struct PipelineConfig {
    windowing::WindowConfig window{10, 5, windowing::WindowType::Week};
    std::vector<std::string> detectors{"kde", "kmeans", "lof"};
    detectors::DetectorParams params;
    std::string date_format{kCertDateFormat};
    std::optional<std::string> activity_filter;
    int min_training_instances = 30;

    // Throws ConfigError.
    void validate() const;
    std::vector<std::string> warnings() const;
};

// Schema:
// { "window_parameters": {"window_size": 10, "sliding_size": 5, "type": "week"},
//   "detectors": {"kde": {"kde_parameter": 0.5},
//                 "kmeans": {"kmeans_parameter": 1.5, "seed": 42},
//                 "lof": {"lof_parameter": 95, "n_neighbors": 20}},
//   "date_format": "%m/%d/%Y %H:%M:%S",
//   "activity_filter": "Logon",
//   "min_training_instances": 30 }
// Every key is optional; the detector set is the key set of "detectors".
PipelineConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const PipelineConfig& config);
PipelineConfig load_config(const std::string& path);

} // namespace astd::pipeline
