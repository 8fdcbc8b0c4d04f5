#pragma once

#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace astd::detectors {

struct Score {
    int binary = 0;   // 1 flags an anomaly
    double raw = 0.0; // larger is more anomalous
};

// Common interface of the anomaly detection models. A detector is refitted
// from a full window snapshot and then scores single events by their
// minute of the day.
class Detector {
public:
    virtual ~Detector() = default;

    virtual std::string_view name() const = 0;
    // Smallest training set fit_partial accepts.
    virtual std::size_t min_samples() const = 0;
    virtual std::unique_ptr<Detector> clone() const = 0;
    virtual void describe(std::ostream& out) const = 0;

    // Replaces the model with one trained on `minutes`. Throws NotEnoughData.
    void fit_partial(std::span<const int> minutes);
    // Requires a fitted model; throws std::logic_error otherwise.
    Score score_partial(int minute) const;

    // Window version of the last fit, -1 before the first one.
    int trained_version() const { return trained_version_; }
    void set_trained_version(int version) { trained_version_ = version; }
    bool trained() const { return trained_version_ >= 0; }

protected:
    virtual void fit_model(std::span<const int> minutes) = 0;
    virtual Score score_model(int minute) const = 0;

private:
    int trained_version_ = -1;
};

} // namespace astd::detectors
