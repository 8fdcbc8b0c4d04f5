#include "astd/detectors/lof.hpp"

#include "astd/common/errors.hpp"
#include "astd/detectors/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace astd::detectors {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Neighborhood {
    double k_distance = 0.0;
    std::vector<std::size_t> members; // every point within k_distance
};

// k nearest neighbours of `query` among `points`, ties at the k-distance
// included. `skip` excludes the query itself when it is a training point.
Neighborhood neighborhood(const std::vector<Point2>& points, const Point2& query, int k, std::size_t skip) {
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (j != skip) {
            dist.emplace_back(cosine_distance(query, points[j]), j);
        }
    }
    std::sort(dist.begin(), dist.end());
    Neighborhood hood;
    hood.k_distance = dist[static_cast<std::size_t>(k) - 1].first;
    for (const auto& [d, j] : dist) {
        if (d > hood.k_distance) {
            break;
        }
        hood.members.push_back(j);
    }
    return hood;
}

double reach_density(const std::vector<Point2>& points, const std::vector<double>& k_distance,
                     const Point2& query, const Neighborhood& hood) {
    double sum = 0.0;
    for (std::size_t o : hood.members) {
        sum += std::max(k_distance[o], cosine_distance(query, points[o]));
    }
    const double mean_reach = sum / static_cast<double>(hood.members.size());
    return mean_reach == 0.0 ? kInf : 1.0 / mean_reach;
}

double outlier_factor(const std::vector<double>& lrd, const Neighborhood& hood, double own_lrd) {
    double sum = 0.0;
    for (std::size_t o : hood.members) {
        sum += lrd[o];
    }
    const double mean_lrd = sum / static_cast<double>(hood.members.size());
    if (std::isinf(own_lrd)) {
        return std::isinf(mean_lrd) ? 1.0 : 0.0;
    }
    return mean_lrd / own_lrd;
}

} // namespace

LofModel lof_fit(std::span<const double> hours, double percentile_rank, int n_neighbors) {
    const std::size_t n = hours.size();
    if (n < 3) {
        throw NotEnoughData("LOF needs at least 3 samples, got " + std::to_string(n));
    }
    if (n_neighbors < 1) {
        throw ConfigError("n_neighbors must be at least 1");
    }
    LofModel model;
    model.percentile = percentile_rank;
    model.n_neighbors = n_neighbors;
    model.k = std::min(n_neighbors, static_cast<int>(n) - 1);
    for (double h : hours) {
        model.points.push_back(to_cartesian(h));
    }

    std::vector<Neighborhood> hoods;
    hoods.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        hoods.push_back(neighborhood(model.points, model.points[i], model.k, i));
        model.k_distance.push_back(hoods.back().k_distance);
    }
    for (std::size_t i = 0; i < n; ++i) {
        model.lrd.push_back(reach_density(model.points, model.k_distance, model.points[i], hoods[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        model.scores.push_back(outlier_factor(model.lrd, hoods[i], model.lrd[i]));
    }
    model.score_threshold = percentile(model.scores, percentile_rank);
    return model;
}

double LofModel::novelty_score(const Point2& p) const {
    const Neighborhood hood = neighborhood(points, p, k, points.size());
    return outlier_factor(lrd, hood, reach_density(points, k_distance, p, hood));
}

Score lof_score(const LofModel& model, double hour) {
    const double raw = model.novelty_score(to_cartesian(hour));
    return {raw > model.score_threshold ? 1 : 0, raw};
}

void LofDetector::fit_model(std::span<const int> minutes) {
    std::vector<double> hours;
    hours.reserve(minutes.size());
    for (int m : minutes) {
        hours.push_back(minutes_to_hours(m));
    }
    model_ = lof_fit(hours, percentile_, n_neighbors_);
}

Score LofDetector::score_model(int minute) const { return lof_score(model_, minutes_to_hours(minute)); }

void LofDetector::describe(std::ostream& out) const {
    out << "lof(percentile=" << percentile_ << ", n_neighbors=" << n_neighbors_ << ", version=" << trained_version()
        << ", n=" << model_.points.size() << ", threshold=" << model_.score_threshold << ")";
}

} // namespace astd::detectors
