#include "astd/pipeline/pattern.hpp"

#include "astd/common/errors.hpp"
#include "astd/detectors/registry.hpp"
#include "astd/pipeline/objects.hpp"

#include <algorithm>

namespace astd::pipeline {

using engine::Env;
using engine::Value;
using engine::ValueKind;

namespace {

engine::EventPattern event_pattern() {
    return {names::kEvent,
            {engine::Bound{engine::var(names::kUserId)}, engine::Capture{names::kEventDate, ValueKind::Text},
             engine::Capture{names::kEventId, ValueKind::Text}}};
}

engine::SpecPtr loop_automaton(std::string name, engine::Guard guard, engine::Action action) {
    engine::Automaton a;
    a.states = {"S0"};
    a.initial = "S0";
    a.finals = {"S0"};
    a.transitions.push_back({"S0", event_pattern(), std::move(guard), std::move(action), "S0"});
    return engine::make_spec(std::move(name), std::move(a));
}

template <class T>
const T& read(const Env& env, const char* name) {
    return env.object<Held<T>>(name).value;
}

template <class T>
T& write(Env& env, const char* name) {
    return env.mutate<Held<T>>(name).value;
}

Timestamp event_time(const Env& env, const PipelineConfig& config) {
    return parse_timestamp(env.at(names::kEventDate).as_text(), config.date_format);
}

} // namespace

bool training_guard(const Env& env, const PipelineConfig& config) {
    const auto& window = read<windowing::Window>(env, names::kWindow);
    const auto& data = read<windowing::TrainingData>(env, names::kData);
    const auto& set = read<DetectorSet>(env, names::kMapDetectors);
    const auto& detector = *set.models.at(env.at(names::kDetector).as_text());
    const std::size_t needed =
        std::max(static_cast<std::size_t>(config.min_training_instances), detector.min_samples());
    return data.size() >= needed && window.version() >= 1 && window.version() > detector.trained_version();
}

bool detection_guard(const Env& env) {
    const auto& set = read<DetectorSet>(env, names::kMapDetectors);
    return set.models.at(env.at(names::kDetector).as_text())->trained();
}

engine::SpecLibrary build_spec(const PipelineConfig& config) {
    config.validate();

    auto training = loop_automaton(
        names::kTraining, [config](const Env& env) { return training_guard(env, config); },
        [](Env& env) {
            const std::string name = env.at(names::kDetector).as_text();
            const int version = read<windowing::Window>(env, names::kWindow).version();
            const auto minutes = windowing::training_set(read<windowing::TrainingData>(env, names::kData));
            auto& set = write<DetectorSet>(env, names::kMapDetectors);
            std::unique_ptr<detectors::Detector> fresh = set.models.at(name)->clone();
            fresh->fit_partial(minutes);
            fresh->set_trained_version(version);
            set.models[name] = std::move(fresh);
            ++set.fits[name];
        });

    auto detection = loop_automaton(
        names::kDetection, [](const Env& env) { return detection_guard(env); },
        [config](Env& env) {
            const std::string name = env.at(names::kDetector).as_text();
            const int minute = minute_of_day(event_time(env, config));
            const auto score = read<DetectorSet>(env, names::kMapDetectors).models.at(name)->score_partial(minute);
            write<ensemble::ScoreBoard>(env, names::kScores).cast(name, score.binary, score.raw);
        });

    auto instance = engine::make_spec(names::kDetectorInstance, engine::Flow{training, detection}, {}, {},
                                      {names::kDetector});

    std::vector<Value> domain(config.detectors.begin(), config.detectors.end());
    auto detector_set = engine::make_spec(
        names::kDetectors,
        engine::QFlow{names::kDetector, domain,
                      engine::make_spec("callDetectorInstance",
                                        engine::Call{names::kDetectorInstance, {engine::var(names::kDetector)}})},
        {{names::kMapDetectors, [config] {
              DetectorSet set;
              set.models = detectors::init_map(config.detectors, config.params);
              return hold(std::move(set));
          }}});

    auto vote = loop_automaton(names::kMajorityVote, {}, [](Env& env) {
        auto& board = write<ensemble::ScoreBoard>(env, names::kScores);
        VoteRecord record;
        record.event_id = env.at(names::kEventId).as_text();
        record.event_date = env.at(names::kEventDate).as_text();
        record.ballots = board.ballots();
        std::sort(record.ballots.begin(), record.ballots.end(),
                  [](const auto& a, const auto& b) { return a.detector < b.detector; });
        for (const auto& b : record.ballots) {
            record.positive += b.vote;
        }
        record.alerted = ensemble::majority_vote(board, write<AlertList>(env, names::kAlerts), record.event_id,
                                                 record.event_date, env.at(names::kUserId).as_text());
        write<VoteRecord>(env, names::kLastVote) = std::move(record);
    });

    auto combination = engine::make_spec(names::kCombination, engine::Flow{detector_set, vote},
                                         {{names::kScores, [] { return hold(ensemble::ScoreBoard{}); }}});

    auto parser = loop_automaton(names::kDataParser, {}, [config](Env& env) {
        const Timestamp ts = event_time(env, config);
        auto& data = write<windowing::TrainingData>(env, names::kData);
        auto& window = write<windowing::Window>(env, names::kWindow);
        windowing::formatting_data(data, window, ts);
    });

    auto per_user = engine::make_spec(
        names::kPerUser, engine::Flow{combination, parser},
        {{names::kWindow, [config] { return hold(windowing::Window(config.window)); }},
         {names::kData, [] { return hold(windowing::TrainingData{}); }},
         {names::kAlerts, [] { return hold(AlertList{}); }},
         {names::kLastVote, [] { return hold(VoteRecord{}); }}});

    auto root = engine::make_spec(names::kRoot, engine::QInterleave{names::kUserId, std::nullopt, per_user, 0});

    engine::SpecLibrary library;
    library.add(root);
    library.add(instance);
    return library;
}

} // namespace astd::pipeline
