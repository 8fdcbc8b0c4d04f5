#include "astd/common/timestamp.hpp"

#include "astd/common/errors.hpp"

#include <ctime>
#include <iomanip>
#include <sstream>

namespace astd {
namespace {

bool parse_with(std::string_view text, const std::string& format, Timestamp& out) {
    std::tm tm{};
    std::istringstream in{std::string(text)};
    in >> std::get_time(&tm, format.c_str());
    if (in.fail()) {
        return false;
    }
    // Trailing garbage other than whitespace is rejected.
    in >> std::ws;
    if (!in.eof()) {
        return false;
    }
    using namespace std::chrono;
    const year_month_day ymd{year{tm.tm_year + 1900}, month{static_cast<unsigned>(tm.tm_mon + 1)},
                             day{static_cast<unsigned>(tm.tm_mday)}};
    if (!ymd.ok() || tm.tm_hour > 23 || tm.tm_min > 59 || tm.tm_sec > 60) {
        return false;
    }
    out = sys_days{ymd} + hours{tm.tm_hour} + minutes{tm.tm_min} + seconds{tm.tm_sec};
    return true;
}

} // namespace

bool try_parse_timestamp(std::string_view text, std::string_view format, Timestamp& out) {
    if (text.empty()) {
        return false;
    }
    if (parse_with(text, std::string(format), out)) {
        return true;
    }
    return parse_with(text, "%Y-%m-%d %H:%M:%S", out) || parse_with(text, "%Y-%m-%dT%H:%M:%S", out);
}

Timestamp parse_timestamp(std::string_view text, std::string_view format) {
    Timestamp ts;
    if (!try_parse_timestamp(text, format, ts)) {
        throw InputError("unparseable timestamp '" + std::string(text) + "'");
    }
    return ts;
}

std::string format_timestamp(Timestamp ts, std::string_view format) {
    using namespace std::chrono;
    const auto day_start = floor<days>(ts);
    const year_month_day ymd{day_start};
    const hh_mm_ss hms{ts - day_start};
    std::tm tm{};
    tm.tm_year = static_cast<int>(ymd.year()) - 1900;
    tm.tm_mon = static_cast<int>(static_cast<unsigned>(ymd.month())) - 1;
    tm.tm_mday = static_cast<int>(static_cast<unsigned>(ymd.day()));
    tm.tm_hour = static_cast<int>(hms.hours().count());
    tm.tm_min = static_cast<int>(hms.minutes().count());
    tm.tm_sec = static_cast<int>(hms.seconds().count());
    std::ostringstream out;
    out << std::put_time(&tm, std::string(format).c_str());
    return out.str();
}

int minute_of_day(Timestamp ts) {
    using namespace std::chrono;
    const auto since_midnight = ts - floor<days>(ts);
    return static_cast<int>(duration_cast<minutes>(since_midnight).count());
}

} // namespace astd
