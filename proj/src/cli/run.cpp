#include "astd/cli/run.hpp"

#include <cmath>

namespace astd::cli {

namespace {

nlohmann::json real_or_text(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    if (std::isnan(x)) {
        return "nan";
    }
    return x > 0 ? "inf" : "-inf";
}

} // namespace

nlohmann::json alert_record(const ensemble::Alert& alert) {
    return {{"eventId", alert.event_id},
            {"userId", alert.user_id},
            {"eventDate", alert.event_date},
            {"votes", alert.votes}};
}

nlohmann::json score_record(const pipeline::ScoredEvent& scored) {
    nlohmann::json detectors = nlohmann::json::object();
    for (const auto& b : scored.ballots) {
        detectors[b.detector] = {{"raw", real_or_text(b.raw)}, {"binary", b.vote}};
    }
    return {{"eventId", scored.event_id},
            {"userId", scored.user_id},
            {"eventDate", scored.event_date},
            {"votes", scored.positive},
            {"cast", scored.ballots.size()},
            {"alert", scored.alerted},
            {"detectors", std::move(detectors)}};
}

RunSummary run_records(const std::vector<LogRecord>& records, const pipeline::PipelineConfig& config,
                       const RunOutputs& outputs) {
    pipeline::Runtime runtime(config);
    RunSummary summary;
    for (const auto& record : records) {
        const auto skipped_before = runtime.stats().skipped;
        const auto raised = runtime.process_event(to_event(record));
        if (outputs.alerts != nullptr) {
            for (const auto& alert : raised) {
                *outputs.alerts << alert_record(alert).dump() << '\n';
            }
        }
        if (outputs.scores != nullptr && runtime.stats().skipped == skipped_before && runtime.last_scored()) {
            *outputs.scores << score_record(*runtime.last_scored()).dump() << '\n';
        }
    }
    summary.stats = runtime.stats();
    summary.users = runtime.user_count();
    return summary;
}

nlohmann::json summary_json(const RunSummary& summary) {
    return {{"rows", summary.ingest.rows},
            {"malformed", summary.ingest.malformed},
            {"filtered", summary.ingest.filtered},
            {"events", summary.stats.events},
            {"users", summary.users},
            {"alerts", summary.stats.alerts},
            {"retrains", summary.stats.retrains},
            {"skipped", summary.stats.skipped}};
}

} // namespace astd::cli
