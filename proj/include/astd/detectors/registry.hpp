#pragma once

#include "astd/detectors/detector.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace astd::detectors {

struct DetectorParams {
    double kde_parameter = 0.5;     // density percentile, expected in [0.5, 5]
    double kmeans_parameter = 1.5;  // z-score threshold, expected in [1.5, 2.5]
    std::uint64_t kmeans_seed = 42;
    double lof_parameter = 95.0;    // LOF percentile, expected in [75, 95]
    int n_neighbors = 20;
};

// One message per parameter outside its expected range. Out-of-range values
// are still used.
std::vector<std::string> parameter_warnings(const DetectorParams& params);

using DetectorPtr = std::shared_ptr<const Detector>;
using DetectorMap = std::map<std::string, DetectorPtr>;

class DetectorRegistry {
public:
    using Factory = std::function<std::unique_ptr<Detector>(const DetectorParams&)>;

    void add(std::string name, Factory factory);
    bool contains(const std::string& name) const { return factories_.count(name) != 0; }
    std::vector<std::string> names() const;
    // Throws ConfigError naming an unknown detector.
    std::unique_ptr<Detector> make(const std::string& name, const DetectorParams& params) const;

    // kde, kmeans and lof.
    static const DetectorRegistry& builtin();

private:
    std::map<std::string, Factory> factories_;
};

// The three built-in detectors, untrained.
DetectorMap init_map(const DetectorParams& params);
DetectorMap init_map(const std::vector<std::string>& names, const DetectorParams& params,
                     const DetectorRegistry& registry = DetectorRegistry::builtin());

} // namespace astd::detectors
