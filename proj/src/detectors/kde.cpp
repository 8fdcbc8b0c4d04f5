#include "astd/detectors/kde.hpp"

#include "astd/common/errors.hpp"
#include "astd/detectors/circular.hpp"
#include "astd/detectors/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace astd::detectors {

double KdeModel::density(double hour) const {
    const double inv_norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * bandwidth);
    double sum = 0.0;
    for (double x : samples) {
        for (double shift : {-kHoursPerDay, 0.0, kHoursPerDay}) {
            const double u = (hour - x + shift) / bandwidth;
            sum += std::exp(-0.5 * u * u);
        }
    }
    return sum * inv_norm / static_cast<double>(samples.size());
}

double silverman_bandwidth(std::span<const double> hours) {
    std::vector<double> sorted(hours.begin(), hours.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    // Cut the circle at the widest gap between consecutive samples.
    std::size_t cut = 0; // index of the first sample after the gap
    double widest = sorted.front() + kHoursPerDay - sorted.back();
    for (std::size_t i = 1; i < n; ++i) {
        if (sorted[i] - sorted[i - 1] > widest) {
            widest = sorted[i] - sorted[i - 1];
            cut = i;
        }
    }
    std::vector<double> unrolled;
    unrolled.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (cut + i) % n;
        unrolled.push_back(j < cut ? sorted[j] + kHoursPerDay : sorted[j]);
    }

    const double sd = sample_stddev(unrolled);
    const double iqr = percentile(unrolled, 75.0) - percentile(unrolled, 25.0);
    double spread = sd;
    if (iqr > 0.0) {
        spread = std::min(sd, iqr / 1.34);
    }
    const double h = 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
    return std::clamp(h, kMinBandwidth, kMaxBandwidth);
}

KdeModel kde_fit(std::span<const double> hours, double percentile_rank) {
    if (hours.size() < 2) {
        throw NotEnoughData("KDE needs at least 2 samples, got " + std::to_string(hours.size()));
    }
    KdeModel model;
    model.percentile = percentile_rank;
    model.samples.assign(hours.begin(), hours.end());
    model.bandwidth = silverman_bandwidth(hours);
    std::vector<double> densities;
    densities.reserve(hours.size());
    for (double x : hours) {
        densities.push_back(model.density(x));
    }
    model.density_threshold = percentile(densities, percentile_rank);
    return model;
}

Score kde_score(const KdeModel& model, double hour) {
    const double f = model.density(hour);
    return {f < model.density_threshold ? 1 : 0, model.density_threshold - f};
}

void KdeDetector::fit_model(std::span<const int> minutes) {
    std::vector<double> hours;
    hours.reserve(minutes.size());
    for (int m : minutes) {
        hours.push_back(minutes_to_hours(m));
    }
    model_ = kde_fit(hours, percentile_);
}

Score KdeDetector::score_model(int minute) const { return kde_score(model_, minutes_to_hours(minute)); }

void KdeDetector::describe(std::ostream& out) const {
    out << "kde(percentile=" << percentile_ << ", version=" << trained_version() << ", n=" << model_.samples.size()
        << ", h=" << model_.bandwidth << ", threshold=" << model_.density_threshold << ")";
}

} // namespace astd::detectors
