#pragma once

#include "astd/detectors/circular.hpp"
#include "astd/detectors/detector.hpp"

#include <span>
#include <vector>

namespace astd::detectors {

inline constexpr int kDefaultNeighbors = 20;

// Local outlier factor under the cosine distance of the points' images on
// the unit circle. Duplicate points make reachability densities infinite;
// by convention 1/0 = ∞ and ∞/∞ = 1.
struct LofModel {
    double percentile = 95.0;
    int n_neighbors = kDefaultNeighbors;
    int k = 0; // min(n_neighbors, n - 1)
    std::vector<Point2> points;
    std::vector<double> k_distance;
    std::vector<double> lrd;
    std::vector<double> scores; // LOF of each training point
    double score_threshold = 0.0;

    // LOF of a new point against the training points only.
    double novelty_score(const Point2& p) const;
};

LofModel lof_fit(std::span<const double> hours, double percentile, int n_neighbors = kDefaultNeighbors);

// binary = 1 iff the novelty LOF exceeds the threshold.
Score lof_score(const LofModel& model, double hour);

class LofDetector final : public Detector {
public:
    LofDetector(double percentile, int n_neighbors) : percentile_(percentile), n_neighbors_(n_neighbors) {}

    std::string_view name() const override { return "lof"; }
    std::size_t min_samples() const override { return 3; }
    std::unique_ptr<Detector> clone() const override { return std::make_unique<LofDetector>(*this); }
    void describe(std::ostream& out) const override;

    const LofModel& model() const { return model_; }

protected:
    void fit_model(std::span<const int> minutes) override;
    Score score_model(int minute) const override;

private:
    double percentile_;
    int n_neighbors_;
    LofModel model_;
};

} // namespace astd::detectors
