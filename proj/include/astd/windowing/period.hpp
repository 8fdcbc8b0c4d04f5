#pragma once

#include "astd/common/timestamp.hpp"

#include <string>
#include <string_view>

namespace astd::windowing {

enum class WindowType { Day, Week, Instance };

WindowType parse_window_type(std::string_view text);
std::string_view to_string(WindowType type);

// Day periods are encoded YYYYDDD (day of year, 1-based); week periods are
// YYYYWW with the ISO-8601 week-numbering year and week.
int compute_period(Timestamp ts, WindowType type);

} // namespace astd::windowing
