#pragma once

#include "astd/engine/interpreter.hpp"
#include "astd/ensemble/voting.hpp"
#include "astd/pipeline/config.hpp"
#include "astd/pipeline/objects.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace astd::pipeline {

struct ScoredEvent {
    std::string event_id;
    std::string user_id;
    std::string event_date;
    std::vector<ensemble::Ballot> ballots; // sorted by detector name
    int positive = 0;
    bool alerted = false;
};

struct RunStats {
    std::int64_t events = 0;   // accepted by the specification
    std::int64_t skipped = 0;  // unparseable dates or malformed events
    std::int64_t alerts = 0;
    std::int64_t retrains = 0;
};

// The anomaly detection specification and its current state.
class Runtime {
public:
    explicit Runtime(PipelineConfig config);

    const PipelineConfig& config() const { return config_; }

    // Feeds e(userId, eventDate, eventId). Returns the alerts raised by it.
    std::vector<ensemble::Alert> process_event(const engine::Event& event);
    std::vector<ensemble::Alert> process(const std::string& user, const std::string& date, const std::string& id);

    // Scores of the last accepted event.
    const std::optional<ScoredEvent>& last_scored() const { return last_scored_; }
    const RunStats& stats() const { return stats_; }

    std::size_t user_count() const;
    std::vector<std::string> users() const;
    // Per-user attributes, nullptr for unknown users.
    const windowing::Window* window(const std::string& user) const;
    const windowing::TrainingData* data(const std::string& user) const;
    const AlertList* alerts(const std::string& user) const;
    const DetectorSet* detectors(const std::string& user) const;

    const engine::Interpreter& interpreter() const { return interpreter_; }
    engine::Interpreter& interpreter() { return interpreter_; }
    const engine::AstdState& state() const { return state_; }
    std::string dump_state() const { return interpreter_.dump(state_); }

private:
    const engine::AstdState* user_state(const std::string& user) const;
    const engine::AstdState* detectors_state(const std::string& user) const;

    PipelineConfig config_;
    engine::Interpreter interpreter_;
    engine::AstdState state_;
    std::optional<ScoredEvent> last_scored_;
    RunStats stats_;
};

} // namespace astd::pipeline
