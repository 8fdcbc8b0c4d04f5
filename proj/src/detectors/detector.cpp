#include "astd/detectors/detector.hpp"

#include <stdexcept>

namespace astd::detectors {

void Detector::fit_partial(std::span<const int> minutes) {
    fit_model(minutes);
    if (trained_version_ < 0) {
        trained_version_ = 0;
    }
}

Score Detector::score_partial(int minute) const {
    if (!trained()) {
        throw std::logic_error(std::string(name()) + " detector scored before being trained");
    }
    return score_model(minute);
}

} // namespace astd::detectors
