#include "astd/windowing/period.hpp"

#include "astd/common/errors.hpp"

namespace astd::windowing {

WindowType parse_window_type(std::string_view text) {
    if (text == "day") {
        return WindowType::Day;
    }
    if (text == "week") {
        return WindowType::Week;
    }
    if (text == "instance") {
        return WindowType::Instance;
    }
    throw ConfigError("unknown window type '" + std::string(text) + "' (expected day, week or instance)");
}

std::string_view to_string(WindowType type) {
    switch (type) {
    case WindowType::Day: return "day";
    case WindowType::Week: return "week";
    case WindowType::Instance: return "instance";
    }
    return "?";
}

namespace {

using namespace std::chrono;

// Monday of ISO week 1 of `y`: the week containing January 4th.
sys_days iso_week1_monday(year y) {
    const sys_days jan4{y / January / 4};
    const unsigned offset = weekday{jan4}.iso_encoding() - 1; // Monday = 0
    return jan4 - days{offset};
}

} // namespace

int compute_period(Timestamp ts, WindowType type) {
    const sys_days day_point = floor<days>(ts);
    const year_month_day ymd{day_point};
    const int y = static_cast<int>(ymd.year());
    switch (type) {
    case WindowType::Day: {
        const auto day_of_year = (day_point - sys_days{ymd.year() / January / 1}).count() + 1;
        return y * 1000 + static_cast<int>(day_of_year);
    }
    case WindowType::Week: {
        year week_year = ymd.year();
        if (day_point < iso_week1_monday(week_year)) {
            --week_year;
        } else if (day_point >= iso_week1_monday(week_year + years{1})) {
            ++week_year;
        }
        const auto week = (day_point - iso_week1_monday(week_year)).count() / 7 + 1;
        return static_cast<int>(week_year) * 100 + static_cast<int>(week);
    }
    case WindowType::Instance: break;
    }
    throw Error("instance windows have no calendar period");
}

} // namespace astd::windowing
