#pragma once

#include "astd/engine/spec.hpp"
#include "astd/engine/state.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>

namespace astd::engine {

struct StepResult {
    AstdState state;
    Env enclosing; // E'_e
};

// Executes ASTD specifications. Quantified flows visit their domain in
// ascending value order unless an order hook is installed.
class Interpreter {
public:
    // Chooses the instance order for one quantified-flow step.
    using OrderHook =
        std::function<std::vector<Value>(const AstdSpec& node, const std::vector<Value>& canonical)>;

    Interpreter(SpecLibrary library, std::string root);

    const AstdSpec& root() const { return library_.resolve(root_); }
    const SpecLibrary& library() const { return library_; }

    AstdState init() const { return init(root()); }
    AstdState init(const AstdSpec& spec) const;

    bool is_final(const AstdState& state) const { return is_final(root(), state); }
    bool is_final(const AstdSpec& spec, const AstdState& state) const;

    // One labelled transition. nullopt means the event is refused. Actions
    // throw through this call; the input state is never modified.
    std::optional<StepResult> step(const AstdSpec& spec, const AstdState& state, const Event& event,
                                   const Env& enclosing) const;

    // Steps the root and commits on acceptance.
    bool execute(AstdState& state, const Event& event, Env& global) const;
    bool execute(AstdState& state, const Event& event) const {
        Env global;
        return execute(state, event, global);
    }

    void set_order_hook(OrderHook hook) { order_hook_ = std::move(hook); }

    // Canonical nested text form, keys in ascending order.
    void dump(std::ostream& out, const AstdState& state) const { dump(out, root(), state, 0); }
    std::string dump(const AstdState& state) const;

private:
    struct BodyResult {
        decltype(AstdState::node) node;
        Env env; // E''_g
    };

    std::optional<BodyResult> step_automaton(const AstdSpec& spec, const Automaton& a,
                                             const AutomatonState& s, const Event& event,
                                             const Env& global) const;
    std::optional<BodyResult> step_flow(const Flow& f, const FlowState& s, const Event& event,
                                        const Env& global) const;
    std::optional<BodyResult> step_qflow(const AstdSpec& spec, const QFlow& q, const QFlowState& s,
                                         const Event& event, const Env& global) const;
    std::optional<BodyResult> step_qinterleave(const QInterleave& q, const QInterleaveState& s,
                                               const Event& event, const Env& global) const;
    std::optional<BodyResult> step_call(const Call& c, const CallState& s, const Event& event,
                                        const Env& global) const;

    void dump(std::ostream& out, const AstdSpec& spec, const AstdState& state, int depth) const;

    SpecLibrary library_;
    std::string root_;
    OrderHook order_hook_;
};

} // namespace astd::engine
