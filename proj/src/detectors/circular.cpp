#include "astd/detectors/circular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace astd::detectors {

double circ_distance(double a, double b) {
    if (!(a >= 0.0 && a < kHoursPerDay) || !(b >= 0.0 && b < kHoursPerDay)) {
        throw std::domain_error("circ_distance: hours must lie in [0, 24), got " + std::to_string(a) +
                                " and " + std::to_string(b));
    }
    if (a < b) {
        return std::min(b - a, a - b + kHoursPerDay);
    }
    return std::min(a - b, b - a + kHoursPerDay);
}

double minutes_to_hours(int minute) { return static_cast<double>(minute) / 60.0; }

double wrap_hour(double hour) {
    double h = std::fmod(hour, kHoursPerDay);
    if (h < 0.0) {
        h += kHoursPerDay;
    }
    // fmod of a tiny negative can round up to exactly 24.
    return h >= kHoursPerDay ? 0.0 : h;
}

std::optional<double> circular_mean(std::span<const double> hours) {
    double sx = 0.0;
    double sy = 0.0;
    for (double h : hours) {
        const double angle = 2.0 * std::numbers::pi * h / kHoursPerDay;
        sx += std::cos(angle);
        sy += std::sin(angle);
    }
    if (hours.empty() || std::hypot(sx, sy) < 1e-9 * static_cast<double>(hours.size())) {
        return std::nullopt;
    }
    return wrap_hour(std::atan2(sy, sx) * kHoursPerDay / (2.0 * std::numbers::pi));
}

Point2 to_cartesian(double hour) {
    const double angle = 2.0 * std::numbers::pi * hour / kHoursPerDay;
    return {std::cos(angle), std::sin(angle)};
}

double cosine_distance(const Point2& u, const Point2& v) {
    if (u == v) {
        return 0.0;
    }
    // 1 - cos θ = 2 sin²(θ/2), with θ from atan2 to stay accurate for
    // nearly parallel vectors.
    const double dot = u.x * v.x + u.y * v.y;
    const double cross = u.x * v.y - u.y * v.x;
    const double half_sin = std::sin(std::atan2(std::abs(cross), dot) / 2.0);
    return 2.0 * half_sin * half_sin;
}

} // namespace astd::detectors
