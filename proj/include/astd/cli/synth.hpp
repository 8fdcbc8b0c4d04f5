#pragma once

#include "astd/cli/ingest.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace astd::cli {

struct SynthParams {
    int users = 50;
    int weeks = 26;
    double anomaly_rate = 0.05;
    std::uint64_t seed = 1;
    // "stable": fixed working hours per user.
    // "shifting": like stable, but a share of users moves its schedule
    // later by a few hours partway through the stream.
    std::string profile = "shifting";

    // Throws ConfigError.
    void validate() const;
};

struct SynthOutput {
    std::vector<LogRecord> events;                 // sorted by time
    std::vector<std::pair<std::string, int>> labels; // id, 1 for injected anomalies
};

// Weekday logon/logoff activity around per-user working hours. Each user has
// one insider episode of a few consecutive weeks during which events are
// replaced at random by a Logon between 00:00 and 05:00 the same day; the
// expected fraction of replaced events is anomaly_rate. Starts on Monday
// 2010-01-04.
SynthOutput synthesize(const SynthParams& params);

void write_labels(std::ostream& out, const std::vector<std::pair<std::string, int>>& labels);

} // namespace astd::cli
