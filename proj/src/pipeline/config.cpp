#include "astd/pipeline/config.hpp"

#include "astd/common/errors.hpp"

#include <fstream>
#include <set>

namespace astd::pipeline {

void PipelineConfig::validate() const {
    window.validate();
    if (detectors.empty()) {
        throw ConfigError("at least one detector is required");
    }
    std::set<std::string> seen;
    for (const auto& name : detectors) {
        if (!seen.insert(name).second) {
            throw ConfigError("detector '" + name + "' listed twice");
        }
        if (!detectors::DetectorRegistry::builtin().contains(name)) {
            throw ConfigError("unknown detector '" + name + "'");
        }
    }
    if (min_training_instances < 1) {
        throw ConfigError("min_training_instances must be positive");
    }
    if (params.n_neighbors < 1) {
        throw ConfigError("n_neighbors must be positive");
    }
}

std::vector<std::string> PipelineConfig::warnings() const { return detectors::parameter_warnings(params); }

namespace {

template <class T>
void read(const nlohmann::json& obj, const char* key, T& out) {
    if (auto it = obj.find(key); it != obj.end() && !it->is_null()) {
        try {
            out = it->get<T>();
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
        }
    }
}

} // namespace

PipelineConfig config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    PipelineConfig config;
    if (auto it = doc.find("window_parameters"); it != doc.end()) {
        read(*it, "window_size", config.window.window_size);
        read(*it, "sliding_size", config.window.sliding_size);
        std::string type{windowing::to_string(config.window.type)};
        read(*it, "type", type);
        config.window.type = windowing::parse_window_type(type);
    }
    if (auto it = doc.find("detectors"); it != doc.end()) {
        config.detectors.clear();
        auto add = [&](const std::string& name, const nlohmann::json& params) {
            config.detectors.push_back(name);
            if (name == "kde") {
                read(params, "kde_parameter", config.params.kde_parameter);
            } else if (name == "kmeans") {
                read(params, "kmeans_parameter", config.params.kmeans_parameter);
                read(params, "seed", config.params.kmeans_seed);
            } else if (name == "lof") {
                read(params, "lof_parameter", config.params.lof_parameter);
                read(params, "n_neighbors", config.params.n_neighbors);
            }
        };
        if (it->is_object()) {
            for (const auto& [name, params] : it->items()) {
                add(name, params.is_object() ? params : nlohmann::json::object());
            }
        } else if (it->is_array()) {
            for (const auto& name : *it) {
                if (!name.is_string()) {
                    throw ConfigError("detector names must be strings");
                }
                add(name.get<std::string>(), nlohmann::json::object());
            }
        } else {
            throw ConfigError("'detectors' must be an object or a list of names");
        }
    }
    read(doc, "date_format", config.date_format);
    if (auto it = doc.find("activity_filter"); it != doc.end() && !it->is_null()) {
        std::string filter;
        read(doc, "activity_filter", filter);
        config.activity_filter = filter;
    }
    read(doc, "min_training_instances", config.min_training_instances);
    config.validate();
    return config;
}

nlohmann::json config_to_json(const PipelineConfig& config) {
    nlohmann::json detectors = nlohmann::json::object();
    for (const auto& name : config.detectors) {
        if (name == "kde") {
            detectors[name] = {{"kde_parameter", config.params.kde_parameter}};
        } else if (name == "kmeans") {
            detectors[name] = {{"kmeans_parameter", config.params.kmeans_parameter},
                               {"seed", config.params.kmeans_seed}};
        } else if (name == "lof") {
            detectors[name] = {{"lof_parameter", config.params.lof_parameter},
                               {"n_neighbors", config.params.n_neighbors}};
        } else {
            detectors[name] = nlohmann::json::object();
        }
    }
    nlohmann::json doc = {
        {"window_parameters",
         {{"window_size", config.window.window_size},
          {"sliding_size", config.window.sliding_size},
          {"type", std::string(windowing::to_string(config.window.type))}}},
        {"detectors", detectors},
        {"date_format", config.date_format},
        {"min_training_instances", config.min_training_instances},
    };
    doc["activity_filter"] = config.activity_filter ? nlohmann::json(*config.activity_filter) : nlohmann::json();
    return doc;
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open configuration file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("configuration file '" + path + "' is not valid JSON: " + e.what());
    }
    return config_from_json(doc);
}

} // namespace astd::pipeline
