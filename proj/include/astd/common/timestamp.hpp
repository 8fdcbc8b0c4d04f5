#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace astd {

using Timestamp = std::chrono::sys_seconds;

inline constexpr std::string_view kCertDateFormat = "%m/%d/%Y %H:%M:%S";

// Parses `text` with a strftime-style `format`. When the configured format
// does not match, ISO-8601 ("YYYY-MM-DD HH:MM:SS" or with a 'T') is tried.
// Throws InputError on failure.
Timestamp parse_timestamp(std::string_view text, std::string_view format = kCertDateFormat);

// Same as parse_timestamp but reports failure through the return flag.
bool try_parse_timestamp(std::string_view text, std::string_view format, Timestamp& out);

std::string format_timestamp(Timestamp ts, std::string_view format = kCertDateFormat);

// Minutes elapsed since midnight, in [0, 1440).
int minute_of_day(Timestamp ts);

} // namespace astd
