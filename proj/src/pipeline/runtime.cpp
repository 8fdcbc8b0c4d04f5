#include "astd/pipeline/runtime.hpp"

#include "astd/common/errors.hpp"
#include "astd/pipeline/pattern.hpp"

#include <algorithm>

namespace astd::pipeline {

using engine::AstdState;
using engine::Value;
using engine::ValueKind;

Runtime::Runtime(PipelineConfig config)
    : config_(std::move(config)), interpreter_(build_spec(config_), names::kRoot), state_(interpreter_.init()) {}

std::vector<ensemble::Alert> Runtime::process(const std::string& user, const std::string& date,
                                              const std::string& id) {
    return process_event({names::kEvent, {Value(user), Value(date), Value(id)}});
}

std::vector<ensemble::Alert> Runtime::process_event(const engine::Event& event) {
    if (event.name != names::kEvent || event.args.size() != 3 ||
        !std::all_of(event.args.begin(), event.args.end(), [](const Value& v) { return v.is(ValueKind::Text); })) {
        ++stats_.skipped;
        return {};
    }
    Timestamp ts;
    if (!try_parse_timestamp(event.args[1].as_text(), config_.date_format, ts)) {
        ++stats_.skipped;
        return {};
    }
    const std::string& user = event.args[0].as_text();
    const std::size_t alerts_before = alerts(user) ? alerts(user)->size() : 0;
    int fits_before = 0;
    if (const auto* set = detectors(user)) {
        for (const auto& [name, n] : set->fits) {
            fits_before += n;
        }
    }

    if (!interpreter_.execute(state_, event)) {
        ++stats_.skipped;
        return {};
    }
    ++stats_.events;

    const auto* user_alerts = alerts(user);
    std::vector<ensemble::Alert> raised(user_alerts->begin() + static_cast<std::ptrdiff_t>(alerts_before),
                                        user_alerts->end());
    stats_.alerts += static_cast<std::int64_t>(raised.size());
    int fits_after = 0;
    for (const auto& [name, n] : detectors(user)->fits) {
        fits_after += n;
    }
    stats_.retrains += fits_after - fits_before;

    const auto& vote = user_state(user)->attrs.object<Held<VoteRecord>>(names::kLastVote).value;
    ScoredEvent scored;
    scored.event_id = event.args[2].as_text();
    scored.user_id = user;
    scored.event_date = event.args[1].as_text();
    if (vote.event_id == scored.event_id) {
        scored.ballots = vote.ballots;
        scored.positive = vote.positive;
        scored.alerted = vote.alerted;
    }
    last_scored_ = std::move(scored);
    return raised;
}

const AstdState* Runtime::user_state(const std::string& user) const {
    return engine::find_instance(state_, Value(user));
}

std::size_t Runtime::user_count() const {
    return std::get<engine::QInterleaveState>(state_.node).instances.size();
}

std::vector<std::string> Runtime::users() const {
    std::vector<std::string> out;
    for (const auto& v : std::get<engine::QInterleaveState>(state_.node).arrival) {
        out.push_back(v.as_text());
    }
    return out;
}

const windowing::Window* Runtime::window(const std::string& user) const {
    const auto* s = user_state(user);
    return s ? &s->attrs.object<Held<windowing::Window>>(names::kWindow).value : nullptr;
}

const windowing::TrainingData* Runtime::data(const std::string& user) const {
    const auto* s = user_state(user);
    return s ? &s->attrs.object<Held<windowing::TrainingData>>(names::kData).value : nullptr;
}

const AlertList* Runtime::alerts(const std::string& user) const {
    const auto* s = user_state(user);
    return s ? &s->attrs.object<Held<AlertList>>(names::kAlerts).value : nullptr;
}

const AstdState* Runtime::detectors_state(const std::string& user) const {
    const auto* s = user_state(user);
    if (s == nullptr) {
        return nullptr;
    }
    // detectionPerUser -> Combination -> detectors
    const auto& per_user = std::get<engine::FlowState>(s->node);
    const auto& combination = std::get<engine::FlowState>(per_user.left->node);
    return combination.left.get();
}

const DetectorSet* Runtime::detectors(const std::string& user) const {
    const auto* s = detectors_state(user);
    return s ? &s->attrs.object<Held<DetectorSet>>(names::kMapDetectors).value : nullptr;
}

} // namespace astd::pipeline
