#include "astd/detectors/kmeans.hpp"

#include "astd/common/errors.hpp"
#include "astd/detectors/circular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace astd::detectors {

double silhouette(std::span<const double> points, std::span<const int> labels, int k, const Metric& metric) {
    if (k < 2) {
        throw std::invalid_argument("silhouette is undefined for fewer than two clusters");
    }
    const std::size_t n = points.size();
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
    for (int label : labels) {
        ++sizes.at(static_cast<std::size_t>(label));
    }
    double total = 0.0;
    std::vector<double> sums(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i) {
        const auto own = static_cast<std::size_t>(labels[i]);
        if (sizes[own] <= 1) {
            continue;
        }
        std::fill(sums.begin(), sums.end(), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                sums[static_cast<std::size_t>(labels[j])] += metric(points[i], points[j]);
            }
        }
        const double a = sums[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < sums.size(); ++c) {
            if (c != own && sizes[c] > 0) {
                b = std::min(b, sums[c] / static_cast<double>(sizes[c]));
            }
        }
        const double denom = std::max(a, b);
        if (denom > 0.0 && std::isfinite(b)) {
            total += (b - a) / denom;
        }
    }
    return n == 0 ? 0.0 : total / static_cast<double>(n);
}

namespace {

std::vector<double> plus_plus_seeds(std::span<const double> hours, int k, std::mt19937_64& rng) {
    const std::size_t n = hours.size();
    std::vector<double> centroids;
    std::vector<bool> taken(n, false);
    std::uniform_int_distribution<std::size_t> first(0, n - 1);
    std::size_t idx = first(rng);
    centroids.push_back(hours[idx]);
    taken[idx] = true;

    std::vector<double> weight(n);
    while (static_cast<int>(centroids.size()) < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (double c : centroids) {
                best = std::min(best, circ_distance(hours[i], c));
            }
            weight[i] = taken[i] ? 0.0 : best * best;
            total += weight[i];
        }
        std::size_t pick = n;
        if (total > 0.0) {
            std::uniform_real_distribution<double> draw(0.0, total);
            const double u = draw(rng);
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += weight[i];
                if (weight[i] > 0.0 && acc > u) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) { // rounding at the very end of the range
                for (std::size_t i = n; i-- > 0;) {
                    if (weight[i] > 0.0) {
                        pick = i;
                        break;
                    }
                }
            }
        } else {
            // Every remaining point coincides with a seed.
            pick = static_cast<std::size_t>(std::find(taken.begin(), taken.end(), false) - taken.begin());
        }
        taken[pick] = true;
        centroids.push_back(hours[pick]);
    }
    return centroids;
}

int nearest(double hour, const std::vector<double>& centroids) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        const double d = circ_distance(hour, centroids[c]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(c);
        }
    }
    return best;
}

void assign(std::span<const double> hours, const std::vector<double>& centroids, std::vector<int>& labels) {
    const int k = static_cast<int>(centroids.size());
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < hours.size(); ++i) {
        labels[i] = nearest(hours[i], centroids);
        ++sizes[static_cast<std::size_t>(labels[i])];
    }
    // An empty cluster takes the point farthest from its centroid among
    // clusters that can spare one.
    for (int c = 0; c < k; ++c) {
        if (sizes[static_cast<std::size_t>(c)] != 0) {
            continue;
        }
        std::size_t far = hours.size();
        double far_d = -1.0;
        for (std::size_t i = 0; i < hours.size(); ++i) {
            const auto own = static_cast<std::size_t>(labels[i]);
            if (sizes[own] < 2) {
                continue;
            }
            const double d = circ_distance(hours[i], centroids[own]);
            if (d > far_d) {
                far_d = d;
                far = i;
            }
        }
        if (far == hours.size()) {
            break;
        }
        --sizes[static_cast<std::size_t>(labels[far])];
        labels[far] = c;
        ++sizes[static_cast<std::size_t>(c)];
    }
}

} // namespace

std::vector<int> circular_lloyd(std::span<const double> hours, int k, std::uint64_t seed,
                                std::vector<double>& centroids) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k) * 0x9E3779B97F4A7C15ULL);
    centroids = plus_plus_seeds(hours, k, rng);
    std::vector<int> labels(hours.size(), 0);
    std::vector<double> members;
    for (int iter = 0; iter < kMaxLloydIterations; ++iter) {
        assign(hours, centroids, labels);
        double shift = 0.0;
        for (int c = 0; c < k; ++c) {
            members.clear();
            for (std::size_t i = 0; i < hours.size(); ++i) {
                if (labels[i] == c) {
                    members.push_back(hours[i]);
                }
            }
            if (auto m = circular_mean(members)) {
                shift = std::max(shift, circ_distance(*m, centroids[static_cast<std::size_t>(c)]));
                centroids[static_cast<std::size_t>(c)] = *m;
            }
        }
        if (shift < kCentroidTolerance) {
            break;
        }
    }
    return labels;
}

KMeansModel kmeans_fit(std::span<const double> hours, double threshold, std::uint64_t seed) {
    const std::size_t n = hours.size();
    if (n < 3) {
        throw NotEnoughData("k-means needs at least 3 samples, got " + std::to_string(n));
    }
    const int k_max = std::min<int>(kMaxClusters, static_cast<int>(n) - 1);

    KMeansModel model;
    model.threshold = threshold;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_labels;
    std::vector<double> best_centroids;
    for (int k = 2; k <= k_max; ++k) {
        std::vector<double> centroids;
        std::vector<int> labels = circular_lloyd(hours, k, seed, centroids);
        const double s = silhouette(hours, labels, k, circ_distance);
        if (s > best) {
            best = s;
            model.chosen_k = k;
            best_labels = std::move(labels);
            best_centroids = std::move(centroids);
        }
    }
    model.silhouette = best;
    for (int c = 0; c < model.chosen_k; ++c) {
        Cluster cluster;
        cluster.centroid = best_centroids[static_cast<std::size_t>(c)];
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (best_labels[i] == c) {
                const double d = circ_distance(hours[i], cluster.centroid);
                ss += d * d;
                ++cluster.size;
            }
        }
        cluster.sigma = cluster.size == 0 ? 0.0 : std::sqrt(ss / static_cast<double>(cluster.size));
        model.clusters.push_back(cluster);
    }
    return model;
}

Score kmeans_score(const KMeansModel& model, double hour) {
    if (model.clusters.empty()) {
        throw std::logic_error("k-means model has no clusters");
    }
    const Cluster* closest = nullptr;
    double closest_d = std::numeric_limits<double>::infinity();
    for (const auto& c : model.clusters) {
        const double d = circ_distance(hour, c.centroid);
        if (d < closest_d) {
            closest_d = d;
            closest = &c;
        }
    }
    const double z = closest_d / std::max(closest->sigma, kSigmaFloor);
    return {z > model.threshold ? 1 : 0, z};
}

void KMeansDetector::fit_model(std::span<const int> minutes) {
    std::vector<double> hours;
    hours.reserve(minutes.size());
    for (int m : minutes) {
        hours.push_back(minutes_to_hours(m));
    }
    model_ = kmeans_fit(hours, threshold_, seed_);
}

Score KMeansDetector::score_model(int minute) const { return kmeans_score(model_, minutes_to_hours(minute)); }

void KMeansDetector::describe(std::ostream& out) const {
    out << "kmeans(threshold=" << threshold_ << ", seed=" << seed_ << ", version=" << trained_version()
        << ", k=" << model_.chosen_k << ", centroids=[";
    for (std::size_t i = 0; i < model_.clusters.size(); ++i) {
        out << (i ? ", " : "") << model_.clusters[i].centroid << "/" << model_.clusters[i].sigma;
    }
    out << "])";
}

} // namespace astd::detectors
