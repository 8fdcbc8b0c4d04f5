#pragma once

#include "astd/detectors/detector.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace astd::detectors {

// Lower bound on a cluster's spread when computing z-scores (hours).
inline constexpr double kSigmaFloor = 0.25;
inline constexpr int kMaxClusters = 10;
inline constexpr int kMaxLloydIterations = 100;
inline constexpr double kCentroidTolerance = 1e-6;

using Metric = std::function<double(double, double)>;

// Mean silhouette width. A point in a singleton cluster contributes 0.
// Requires k >= 2 (throws std::invalid_argument) and labels in [0, k).
double silhouette(std::span<const double> points, std::span<const int> labels, int k, const Metric& metric);

struct Cluster {
    double centroid = 0.0; // hours
    double sigma = 0.0;    // RMS circular distance of members to the centroid
    std::size_t size = 0;
};

struct KMeansModel {
    double threshold = 1.5; // z-score above which an event is anomalous
    std::vector<Cluster> clusters;
    int chosen_k = 0;
    double silhouette = 0.0;
};

// Circular k-means on hours in [0, 24). Tries k = 2 .. min(10, n-1) with
// k-means++ seeding and keeps the best silhouette (smaller k on ties).
KMeansModel kmeans_fit(std::span<const double> hours, double threshold, std::uint64_t seed);

// Lloyd iterations for a fixed k; returns the labels and fills `centroids`.
std::vector<int> circular_lloyd(std::span<const double> hours, int k, std::uint64_t seed,
                                std::vector<double>& centroids);

// z = distance to the nearest centroid / max(sigma, kSigmaFloor).
Score kmeans_score(const KMeansModel& model, double hour);

class KMeansDetector final : public Detector {
public:
    KMeansDetector(double threshold, std::uint64_t seed) : threshold_(threshold), seed_(seed) {}

    std::string_view name() const override { return "kmeans"; }
    std::size_t min_samples() const override { return 3; }
    std::unique_ptr<Detector> clone() const override { return std::make_unique<KMeansDetector>(*this); }
    void describe(std::ostream& out) const override;

    const KMeansModel& model() const { return model_; }

protected:
    void fit_model(std::span<const int> minutes) override;
    Score score_model(int minute) const override;

private:
    double threshold_;
    std::uint64_t seed_;
    KMeansModel model_;
};

} // namespace astd::detectors
