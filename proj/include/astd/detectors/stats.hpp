#pragma once

#include <span>

namespace astd::detectors {

// Linear interpolation between closest ranks: r = p/100 * (n-1),
// result = v[floor r] + frac(r) * (v[floor r + 1] - v[floor r]) on the
// sorted values. p in [0, 100]; throws std::invalid_argument on an empty
// input or out-of-range p.
double percentile(std::span<const double> values, double p);

double mean(std::span<const double> values);

// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double sample_stddev(std::span<const double> values);

} // namespace astd::detectors
