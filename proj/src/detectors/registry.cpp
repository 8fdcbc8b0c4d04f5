#include "astd/detectors/registry.hpp"

#include "astd/common/errors.hpp"
#include "astd/detectors/kde.hpp"
#include "astd/detectors/kmeans.hpp"
#include "astd/detectors/lof.hpp"

#include <sstream>

namespace astd::detectors {
namespace {

void check_range(std::vector<std::string>& out, const char* name, double value, double lo, double hi) {
    if (value < lo || value > hi) {
        std::ostringstream msg;
        msg << name << " = " << value << " is outside the expected range [" << lo << ", " << hi << "]";
        out.push_back(msg.str());
    }
}

} // namespace

std::vector<std::string> parameter_warnings(const DetectorParams& params) {
    std::vector<std::string> out;
    check_range(out, "kde_parameter", params.kde_parameter, 0.5, 5.0);
    check_range(out, "kmeans_parameter", params.kmeans_parameter, 1.5, 2.5);
    check_range(out, "lof_parameter", params.lof_parameter, 75.0, 95.0);
    return out;
}

void DetectorRegistry::add(std::string name, Factory factory) { factories_[std::move(name)] = std::move(factory); }

std::vector<std::string> DetectorRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, f] : factories_) {
        out.push_back(name);
    }
    return out;
}

std::unique_ptr<Detector> DetectorRegistry::make(const std::string& name, const DetectorParams& params) const {
    auto it = factories_.find(name);
    if (it == factories_.end()) {
        throw ConfigError("unknown detector '" + name + "'");
    }
    return it->second(params);
}

const DetectorRegistry& DetectorRegistry::builtin() {
    static const DetectorRegistry registry = [] {
        DetectorRegistry r;
        r.add("kde", [](const DetectorParams& p) { return std::make_unique<KdeDetector>(p.kde_parameter); });
        r.add("kmeans", [](const DetectorParams& p) {
            return std::make_unique<KMeansDetector>(p.kmeans_parameter, p.kmeans_seed);
        });
        r.add("lof", [](const DetectorParams& p) {
            return std::make_unique<LofDetector>(p.lof_parameter, p.n_neighbors);
        });
        return r;
    }();
    return registry;
}

DetectorMap init_map(const DetectorParams& params) { return init_map({"kde", "kmeans", "lof"}, params); }

DetectorMap init_map(const std::vector<std::string>& names, const DetectorParams& params,
                     const DetectorRegistry& registry) {
    DetectorMap out;
    for (const auto& name : names) {
        if (out.count(name) != 0) {
            throw ConfigError("detector '" + name + "' listed twice");
        }
        out.emplace(name, registry.make(name, params));
    }
    return out;
}

} // namespace astd::detectors
