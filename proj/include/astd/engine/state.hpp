#pragma once

#include "astd/engine/env.hpp"

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace astd::engine {

struct AstdState;
// Sub-states are immutable once built and shared between snapshots; a step
// rebuilds only the path from the root to the instances that moved.
using StatePtr = std::shared_ptr<const AstdState>;

struct AutomatonState {
    std::string current;
};

struct FlowState {
    StatePtr left;
    StatePtr right;
};

struct QFlowState {
    std::map<Value, StatePtr> instances;
};

struct QInterleaveState {
    std::map<Value, StatePtr> instances;
    // Instance creation order.
    std::vector<Value> arrival;
};

struct CallState {
    StatePtr inner;
};

struct AstdState {
    Env attrs;
    std::variant<AutomatonState, FlowState, QFlowState, QInterleaveState, CallState> node;
};

// Instance of a quantified node for `key`, or nullptr.
const AstdState* find_instance(const AstdState& state, const Value& key);

} // namespace astd::engine
