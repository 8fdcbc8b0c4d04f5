#pragma once

#include "astd/detectors/detector.hpp"

#include <span>
#include <vector>

namespace astd::detectors {

inline constexpr double kMinBandwidth = 0.1; // hours
inline constexpr double kMaxBandwidth = 4.0; // hours; three kernel images suffice below this

// Wrapped Gaussian kernel density over the 24 h day.
struct KdeModel {
    double percentile = 0.5;
    double bandwidth = 1.0;
    std::vector<double> samples; // hours
    double density_threshold = 0.0;

    // (1 / (n h)) Σ_i Σ_{s ∈ {-24, 0, 24}} φ((x - x_i + s) / h)
    double density(double hour) const;
};

// Silverman's rule 0.9 · min(sd, IQR / 1.34) · n^(-1/5), clamped to
// [kMinBandwidth, kMaxBandwidth]. The sample is first unrolled at its
// widest circular gap so that a cluster straddling midnight is measured as
// one compact group.
double silverman_bandwidth(std::span<const double> hours);

KdeModel kde_fit(std::span<const double> hours, double percentile);

// raw = threshold - f(hour); binary = 1 iff f(hour) < threshold.
Score kde_score(const KdeModel& model, double hour);

class KdeDetector final : public Detector {
public:
    explicit KdeDetector(double percentile) : percentile_(percentile) {}

    std::string_view name() const override { return "kde"; }
    std::size_t min_samples() const override { return 2; }
    std::unique_ptr<Detector> clone() const override { return std::make_unique<KdeDetector>(*this); }
    void describe(std::ostream& out) const override;

    const KdeModel& model() const { return model_; }

protected:
    void fit_model(std::span<const int> minutes) override;
    Score score_model(int minute) const override;

private:
    double percentile_;
    KdeModel model_;
};

} // namespace astd::detectors
