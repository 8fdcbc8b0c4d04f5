#pragma once

#include <optional>
#include <span>

namespace astd::detectors {

inline constexpr double kHoursPerDay = 24.0;

// Time between two hours of the day on the 24 h circle, in [0, 12].
// Both arguments must lie in [0, 24); throws std::domain_error otherwise.
double circ_distance(double a, double b);

double minutes_to_hours(int minute);

// Wraps any real into [0, 24).
double wrap_hour(double hour);

// Direction of the resultant vector of `hours`, in [0, 24). nullopt when
// the resultant length is (numerically) zero.
std::optional<double> circular_mean(std::span<const double> hours);

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point2&, const Point2&) = default;
};

// Image of an hour on the unit circle: (cos 2πh/24, sin 2πh/24).
Point2 to_cartesian(double hour);

// 1 - cosine similarity; 0 exactly for identical coordinates.
double cosine_distance(const Point2& u, const Point2& v);

} // namespace astd::detectors
