#include "astd/cli/ingest.hpp"

#include "astd/common/errors.hpp"
#include "astd/pipeline/pattern.hpp"

#include <array>
#include <fstream>
#include <unordered_set>

namespace astd::cli {

namespace {

constexpr std::array<const char*, 5> kColumns{"id", "date", "user", "pc", "activity"};

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

bool needs_quotes(const std::string& field) {
    return field.find_first_of(",\"\n") != std::string::npos;
}

void write_field(std::ostream& out, const std::string& field) {
    if (!needs_quotes(field)) {
        out << field;
        return;
    }
    out << '"';
    for (char c : field) {
        if (c == '"') {
            out << '"';
        }
        out << c;
    }
    out << '"';
}

} // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                current += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::vector<LogRecord> read_log(std::istream& in, const std::optional<std::string>& activity_filter,
                                IngestStats& stats) {
    std::string line;
    if (!std::getline(in, line)) {
        throw InputError("empty input: missing header id,date,user,pc,activity");
    }
    strip_cr(line);
    const auto header = split_csv_line(line);
    std::array<std::size_t, kColumns.size()> index{};
    std::string missing;
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
        std::size_t i = 0;
        while (i < header.size() && header[i] != kColumns[c]) {
            ++i;
        }
        if (i == header.size()) {
            missing += missing.empty() ? kColumns[c] : std::string(", ") + kColumns[c];
        }
        index[c] = i;
    }
    if (!missing.empty()) {
        throw InputError("input header lacks column(s): " + missing);
    }

    std::vector<LogRecord> records;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        strip_cr(line);
        if (line.empty()) {
            continue;
        }
        ++stats.rows;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            ++stats.malformed;
            continue;
        }
        LogRecord r{fields[index[0]], fields[index[1]], fields[index[2]], fields[index[3]], fields[index[4]]};
        if (r.id.empty() || r.date.empty() || r.user.empty() || !seen.insert(r.id).second) {
            ++stats.malformed;
            continue;
        }
        if (activity_filter && r.activity != *activity_filter) {
            ++stats.filtered;
            continue;
        }
        ++stats.retained;
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<LogRecord> read_log_file(const std::string& path, const std::optional<std::string>& activity_filter,
                                     IngestStats& stats) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open input file '" + path + "'");
    }
    return read_log(in, activity_filter, stats);
}

void write_log(std::ostream& out, const std::vector<LogRecord>& records) {
    out << "id,date,user,pc,activity\n";
    for (const auto& r : records) {
        write_field(out, r.id);
        out << ',';
        write_field(out, r.date);
        out << ',';
        write_field(out, r.user);
        out << ',';
        write_field(out, r.pc);
        out << ',';
        write_field(out, r.activity);
        out << '\n';
    }
}

engine::Event to_event(const LogRecord& record) {
    return {pipeline::names::kEvent,
            {engine::Value(record.user), engine::Value(record.date), engine::Value(record.id)}};
}

} // namespace astd::cli
