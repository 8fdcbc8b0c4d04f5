#pragma once

#include "astd/cli/ingest.hpp"
#include "astd/pipeline/runtime.hpp"

#include <json.hpp>

#include <ostream>

namespace astd::cli {

struct RunSummary {
    IngestStats ingest;
    pipeline::RunStats stats;
    std::size_t users = 0;
};

// Sinks for the two line-delimited JSON outputs; either may be null.
struct RunOutputs {
    std::ostream* alerts = nullptr;
    std::ostream* scores = nullptr;
};

// {"eventId","userId","eventDate","votes"}
nlohmann::json alert_record(const ensemble::Alert& alert);

// {"eventId","userId","eventDate","votes","cast","alert",
//  "detectors": {name: {"raw", "binary"}}}, only detectors that voted.
// Non-finite raw scores are written as the strings "inf" and "-inf".
nlohmann::json score_record(const pipeline::ScoredEvent& scored);

// Streams `records` through a fresh pipeline.
RunSummary run_records(const std::vector<LogRecord>& records, const pipeline::PipelineConfig& config,
                       const RunOutputs& outputs);

nlohmann::json summary_json(const RunSummary& summary);

} // namespace astd::cli
