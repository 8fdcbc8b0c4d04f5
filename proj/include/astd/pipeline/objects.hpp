#pragma once

#include "astd/detectors/registry.hpp"
#include "astd/engine/value.hpp"
#include "astd/ensemble/voting.hpp"
#include "astd/windowing/training_data.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace astd::pipeline {

// Detectors of one user plus how often each was refitted.
struct DetectorSet {
    detectors::DetectorMap models;
    std::map<std::string, int> fits;
};

// Outcome of the vote on the latest event, kept for score reporting.
struct VoteRecord {
    std::string event_id;
    std::string event_date;
    std::vector<ensemble::Ballot> ballots; // sorted by detector name
    int positive = 0;
    bool alerted = false;
};

using AlertList = std::vector<ensemble::Alert>;

void describe(std::ostream& out, const windowing::Window& w);
void describe(std::ostream& out, const windowing::TrainingData& d);
void describe(std::ostream& out, const AlertList& alerts);
void describe(std::ostream& out, const ensemble::ScoreBoard& board);
void describe(std::ostream& out, const DetectorSet& set);
void describe(std::ostream& out, const VoteRecord& record);

template <class T>
struct TypeName;
template <> struct TypeName<windowing::Window> { static constexpr std::string_view value = "window"; };
template <> struct TypeName<windowing::TrainingData> { static constexpr std::string_view value = "data"; };
template <> struct TypeName<AlertList> { static constexpr std::string_view value = "alerts"; };
template <> struct TypeName<ensemble::ScoreBoard> { static constexpr std::string_view value = "scores"; };
template <> struct TypeName<DetectorSet> { static constexpr std::string_view value = "detectors"; };
template <> struct TypeName<VoteRecord> { static constexpr std::string_view value = "vote"; };

// Wraps a domain value as an engine object.
template <class T>
class Held final : public engine::Object {
public:
    explicit Held(T value) : value(std::move(value)) {}

    std::unique_ptr<engine::Object> clone() const override { return std::make_unique<Held>(*this); }
    std::string_view type_name() const override { return TypeName<T>::value; }
    void describe(std::ostream& out) const override { pipeline::describe(out, value); }

    T value;
};

template <class T>
engine::Value hold(T value) {
    return engine::Value(engine::Handle(std::make_shared<Held<T>>(std::move(value))));
}

} // namespace astd::pipeline
