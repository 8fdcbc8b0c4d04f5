#pragma once

#include "astd/engine/spec.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace astd::cli {

// One row of a logon log: id,date,user,pc,activity.
struct LogRecord {
    std::string id;
    std::string date;
    std::string user;
    std::string pc;
    std::string activity;

    friend bool operator==(const LogRecord&, const LogRecord&) = default;
};

struct IngestStats {
    std::int64_t rows = 0;      // data rows read, header excluded
    std::int64_t retained = 0;
    std::int64_t malformed = 0; // wrong field count, empty id/date/user, duplicate id
    std::int64_t filtered = 0;  // dropped by the activity filter
};

// Splits one CSV line. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_line(const std::string& line);

// Reads a log with a header naming at least id, date, user, pc and activity
// in any order. Throws InputError when a column is missing.
std::vector<LogRecord> read_log(std::istream& in, const std::optional<std::string>& activity_filter,
                                IngestStats& stats);
// Throws InputError when the file cannot be opened.
std::vector<LogRecord> read_log_file(const std::string& path, const std::optional<std::string>& activity_filter,
                                     IngestStats& stats);

void write_log(std::ostream& out, const std::vector<LogRecord>& records);

// e(user, date, id)
engine::Event to_event(const LogRecord& record);

} // namespace astd::cli
