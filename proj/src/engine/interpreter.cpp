#include "astd/engine/interpreter.hpp"

#include "astd/common/errors.hpp"

#include <algorithm>
#include <sstream>

namespace astd::engine {
namespace {

// Ends the scope of `name` in `env`: the binding visible in `outer` (if any)
// comes back, otherwise the variable disappears.
void unscope(Env& env, const Env& outer, const Var& name) {
    if (auto v = outer.find(name)) {
        env.bind(name, *v);
    } else {
        env.erase(name);
    }
}

[[noreturn]] void shape_mismatch(const AstdSpec& spec) {
    throw Error("internal: state shape does not match " + std::string(spec.kind()) + " '" + spec.name + "'");
}

template <class S>
const S& expect_state(const AstdSpec& spec, const AstdState& state) {
    const auto* s = std::get_if<S>(&state.node);
    if (s == nullptr) {
        shape_mismatch(spec);
    }
    return *s;
}

std::vector<Value> canonical(std::vector<Value> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

void indent(std::ostream& out, int depth) {
    for (int i = 0; i < depth; ++i) {
        out << "  ";
    }
}

} // namespace

const AstdState* find_instance(const AstdState& state, const Value& key) {
    const std::map<Value, StatePtr>* instances = nullptr;
    if (const auto* q = std::get_if<QFlowState>(&state.node)) {
        instances = &q->instances;
    } else if (const auto* q = std::get_if<QInterleaveState>(&state.node)) {
        instances = &q->instances;
    } else {
        return nullptr;
    }
    auto it = instances->find(key);
    return it == instances->end() ? nullptr : it->second.get();
}

Interpreter::Interpreter(SpecLibrary library, std::string root)
    : library_(std::move(library)), root_(std::move(root)) {
    library_.validate(root_);
}

AstdState Interpreter::init(const AstdSpec& spec) const {
    AstdState state;
    for (const auto& attr : spec.attrs) {
        state.attrs.bind(attr.name, attr.initial());
    }
    state.node = std::visit(
        [&](const auto& body) -> decltype(AstdState::node) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, Automaton>) {
                return AutomatonState{body.initial};
            } else if constexpr (std::is_same_v<T, Flow>) {
                return FlowState{std::make_shared<AstdState>(init(*body.left)),
                                 std::make_shared<AstdState>(init(*body.right))};
            } else if constexpr (std::is_same_v<T, QFlow>) {
                QFlowState s;
                for (const auto& c : canonical(body.domain)) {
                    s.instances.emplace(c, std::make_shared<AstdState>(init(*body.body)));
                }
                return s;
            } else if constexpr (std::is_same_v<T, QInterleave>) {
                QInterleaveState s;
                if (body.domain) {
                    for (const auto& c : canonical(*body.domain)) {
                        s.instances.emplace(c, std::make_shared<AstdState>(init(*body.body)));
                        s.arrival.push_back(c);
                    }
                }
                return s;
            } else {
                return CallState{std::make_shared<AstdState>(init(library_.resolve(body.callee)))};
            }
        },
        spec.body);
    return state;
}

bool Interpreter::is_final(const AstdSpec& spec, const AstdState& state) const {
    return std::visit(
        [&](const auto& body) -> bool {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, Automaton>) {
                return body.finals.count(expect_state<AutomatonState>(spec, state).current) != 0;
            } else if constexpr (std::is_same_v<T, Flow>) {
                const auto& s = expect_state<FlowState>(spec, state);
                return is_final(*body.left, *s.left) && is_final(*body.right, *s.right);
            } else if constexpr (std::is_same_v<T, QFlow>) {
                const auto& s = expect_state<QFlowState>(spec, state);
                return std::all_of(s.instances.begin(), s.instances.end(),
                                   [&](const auto& kv) { return is_final(*body.body, *kv.second); });
            } else if constexpr (std::is_same_v<T, QInterleave>) {
                const auto& s = expect_state<QInterleaveState>(spec, state);
                return std::all_of(s.instances.begin(), s.instances.end(),
                                   [&](const auto& kv) { return is_final(*body.body, *kv.second); });
            } else {
                const auto& s = expect_state<CallState>(spec, state);
                return is_final(library_.resolve(body.callee), *s.inner);
            }
        },
        spec.body);
}

std::optional<StepResult> Interpreter::step(const AstdSpec& spec, const AstdState& state, const Event& event,
                                            const Env& enclosing) const {
    // E_g = E_e ⊕ E
    const Env global = enclosing.override_with(state.attrs);

    std::optional<BodyResult> inner = std::visit(
        [&](const auto& body) -> std::optional<BodyResult> {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, Automaton>) {
                return step_automaton(spec, body, expect_state<AutomatonState>(spec, state), event, global);
            } else if constexpr (std::is_same_v<T, Flow>) {
                return step_flow(body, expect_state<FlowState>(spec, state), event, global);
            } else if constexpr (std::is_same_v<T, QFlow>) {
                return step_qflow(spec, body, expect_state<QFlowState>(spec, state), event, global);
            } else if constexpr (std::is_same_v<T, QInterleave>) {
                return step_qinterleave(body, expect_state<QInterleaveState>(spec, state), event, global);
            } else {
                return step_call(body, expect_state<CallState>(spec, state), event, global);
            }
        },
        spec.body);
    if (!inner) {
        return std::nullopt;
    }

    Env& updated = inner->env; // E''_g, then E'_g after the node action
    if (spec.astd_action) {
        spec.astd_action(updated);
    }
    const VarSet attrs = spec.attribute_names();
    StepResult result;
    result.state.attrs = updated.restrict_to(attrs);
    result.state.node = std::move(inner->node);
    result.enclosing = enclosing.override_with(updated.subtract(attrs));
    return result;
}

std::optional<Interpreter::BodyResult> Interpreter::step_automaton(const AstdSpec& spec, const Automaton& a,
                                                                   const AutomatonState& s,
                                                                   const Event& event,
                                                                   const Env& global) const {
    (void)spec;
    for (const auto& t : a.transitions) {
        if (t.source != s.current) {
            continue;
        }
        auto captures = match(t.pattern, event, global);
        if (!captures) {
            continue;
        }
        Env scratch = global.override_with(*captures);
        if (t.guard && !t.guard(scratch)) {
            continue;
        }
        if (t.action) {
            t.action(scratch);
        }
        for (const auto& [name, value] : *captures) {
            unscope(scratch, global, name);
        }
        return BodyResult{AutomatonState{t.target}, std::move(scratch)};
    }
    return std::nullopt;
}

std::optional<Interpreter::BodyResult> Interpreter::step_flow(const Flow& f, const FlowState& s,
                                                              const Event& event, const Env& global) const {
    auto left = step(*f.left, *s.left, event, global);
    const Env& after_left = left ? left->enclosing : global;
    auto right = step(*f.right, *s.right, event, after_left);
    if (!left && !right) {
        return std::nullopt;
    }
    FlowState next{left ? std::make_shared<AstdState>(std::move(left->state)) : s.left,
                   right ? std::make_shared<AstdState>(std::move(right->state)) : s.right};
    Env env = right ? std::move(right->enclosing) : after_left;
    return BodyResult{std::move(next), std::move(env)};
}

std::optional<Interpreter::BodyResult> Interpreter::step_qflow(const AstdSpec& spec, const QFlow& q,
                                                               const QFlowState& s, const Event& event,
                                                               const Env& global) const {
    std::vector<Value> order = canonical(q.domain);
    if (order_hook_) {
        std::vector<Value> chosen = order_hook_(spec, order);
        if (canonical(chosen) != order || chosen.size() != order.size()) {
            throw Error("order hook must return a permutation of the domain of '" + spec.name + "'");
        }
        order = std::move(chosen);
    }

    QFlowState next = s;
    Env current = global; // Es(i)
    bool fired = false;
    for (const auto& c : order) {
        auto it = next.instances.find(c);
        if (it == next.instances.end()) {
            shape_mismatch(spec);
        }
        Env scoped = current;
        scoped.bind(q.var, c);
        auto r = step(*q.body, *it->second, event, scoped);
        if (!r) {
            continue; // Es(i) = Es(i-1)
        }
        fired = true;
        it->second = std::make_shared<AstdState>(std::move(r->state));
        unscope(r->enclosing, current, q.var);
        current = std::move(r->enclosing);
    }
    if (!fired) {
        return std::nullopt;
    }
    return BodyResult{std::move(next), std::move(current)};
}

std::optional<Interpreter::BodyResult> Interpreter::step_qinterleave(const QInterleave& q,
                                                                     const QInterleaveState& s,
                                                                     const Event& event,
                                                                     const Env& global) const {
    if (q.routing_slot >= event.args.size()) {
        throw InputError("event '" + event.name + "' carries no value for '" + q.var + "'");
    }
    const Value& key = event.args[q.routing_slot];
    if (!key.is(ValueKind::Text) && !key.is(ValueKind::Integer)) {
        throw InputError("routing value for '" + q.var + "' must be text or integer, got " +
                         std::string(kind_name(key.kind())));
    }

    AstdState fresh;
    const AstdState* instance = nullptr;
    if (auto it = s.instances.find(key); it != s.instances.end()) {
        instance = it->second.get();
    } else if (q.domain) {
        return std::nullopt; // outside a bounded domain
    } else {
        fresh = init(*q.body);
        instance = &fresh;
    }

    Env scoped = global;
    scoped.bind(q.var, key);
    auto r = step(*q.body, *instance, event, scoped);
    if (!r) {
        return std::nullopt;
    }
    QInterleaveState next = s;
    if (instance == &fresh) {
        next.arrival.push_back(key);
    }
    next.instances[key] = std::make_shared<AstdState>(std::move(r->state));
    unscope(r->enclosing, global, q.var);
    return BodyResult{std::move(next), std::move(r->enclosing)};
}

std::optional<Interpreter::BodyResult> Interpreter::step_call(const Call& c, const CallState& s,
                                                              const Event& event, const Env& global) const {
    const AstdSpec& callee = library_.resolve(c.callee);
    if (callee.params.size() != c.arguments.size()) {
        throw SpecError("call to '" + c.callee + "' has wrong arity");
    }
    Env scoped = global;
    for (std::size_t i = 0; i < c.arguments.size(); ++i) {
        scoped.bind(callee.params[i], c.arguments[i](global));
    }
    auto r = step(callee, *s.inner, event, scoped);
    if (!r) {
        return std::nullopt;
    }
    for (const auto& p : callee.params) {
        unscope(r->enclosing, global, p);
    }
    return BodyResult{CallState{std::make_shared<AstdState>(std::move(r->state))}, std::move(r->enclosing)};
}

bool Interpreter::execute(AstdState& state, const Event& event, Env& global) const {
    auto r = step(root(), state, event, global);
    if (!r) {
        return false;
    }
    state = std::move(r->state);
    global = std::move(r->enclosing);
    return true;
}

std::string Interpreter::dump(const AstdState& state) const {
    std::ostringstream out;
    dump(out, state);
    return out.str();
}

void Interpreter::dump(std::ostream& out, const AstdSpec& spec, const AstdState& state, int depth) const {
    indent(out, depth);
    out << spec.name << " : " << spec.kind();
    if (const auto* a = std::get_if<AutomatonState>(&state.node)) {
        out << " @" << a->current;
    }
    out << " " << state.attrs << "\n";
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, Flow>) {
                const auto& s = expect_state<FlowState>(spec, state);
                dump(out, *body.left, *s.left, depth + 1);
                dump(out, *body.right, *s.right, depth + 1);
            } else if constexpr (std::is_same_v<T, QFlow> || std::is_same_v<T, QInterleave>) {
                using S = std::conditional_t<std::is_same_v<T, QFlow>, QFlowState, QInterleaveState>;
                const auto& s = expect_state<S>(spec, state);
                for (const auto& [key, sub] : s.instances) {
                    indent(out, depth + 1);
                    out << body.var << "=" << key << "\n";
                    dump(out, *body.body, *sub, depth + 2);
                }
            } else if constexpr (std::is_same_v<T, Call>) {
                const auto& s = expect_state<CallState>(spec, state);
                dump(out, library_.resolve(body.callee), *s.inner, depth + 1);
            }
        },
        spec.body);
}

} // namespace astd::engine
