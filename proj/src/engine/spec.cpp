#include "astd/engine/spec.hpp"

#include "astd/common/errors.hpp"

#include <algorithm>

namespace astd::engine {

Expr var(Var name) {
    return [name = std::move(name)](const Env& env) { return env.at(name); };
}

Expr constant(Value v) {
    return [v = std::move(v)](const Env&) { return v; };
}

std::optional<Env> match(const EventPattern& pattern, const Event& event, const Env& env) {
    if (pattern.name != event.name || pattern.slots.size() != event.args.size()) {
        return std::nullopt;
    }
    Env captures;
    for (std::size_t i = 0; i < pattern.slots.size(); ++i) {
        const Value& arg = event.args[i];
        if (const auto* bound = std::get_if<Bound>(&pattern.slots[i])) {
            if (!(bound->expr(env) == arg)) {
                return std::nullopt;
            }
        } else {
            const auto& capture = std::get<Capture>(pattern.slots[i]);
            if (arg.kind() != capture.kind) {
                return std::nullopt;
            }
            captures.bind(capture.name, arg);
        }
    }
    return captures;
}

VarSet AstdSpec::attribute_names() const {
    VarSet out;
    for (const auto& a : attrs) {
        out.insert(a.name);
    }
    return out;
}

std::string_view AstdSpec::kind() const {
    static constexpr std::string_view names[] = {"automaton", "flow", "qflow", "qinterleave", "call"};
    return names[body.index()];
}

SpecPtr make_spec(std::string name, Body body, std::vector<Attribute> attrs, Action astd_action,
                  std::vector<Var> params) {
    auto spec = std::make_shared<AstdSpec>();
    spec->name = std::move(name);
    spec->params = std::move(params);
    spec->attrs = std::move(attrs);
    spec->astd_action = std::move(astd_action);
    spec->body = std::move(body);
    return spec;
}

void SpecLibrary::add(SpecPtr spec) {
    if (!spec) {
        throw SpecError("null specification");
    }
    const std::string name = spec->name;
    if (!specs_.emplace(name, std::move(spec)).second) {
        throw SpecError("duplicate specification name '" + name + "'");
    }
}

const AstdSpec& SpecLibrary::resolve(const std::string& name) const {
    auto it = specs_.find(name);
    if (it == specs_.end()) {
        throw SpecError("unresolved call to '" + name + "'");
    }
    return *it->second;
}

namespace {

void check_node(const SpecLibrary& lib, const AstdSpec& spec, std::vector<std::string>& call_stack) {
    VarSet seen;
    for (const auto& a : spec.attrs) {
        if (!seen.insert(a.name).second) {
            throw SpecError("duplicate attribute '" + a.name + "' in " + spec.name);
        }
        if (!a.initial) {
            throw SpecError("attribute '" + a.name + "' in " + spec.name + " has no initial value");
        }
    }
    std::visit(
        [&](const auto& body) {
            using T = std::decay_t<decltype(body)>;
            if constexpr (std::is_same_v<T, Automaton>) {
                auto has = [&](const std::string& s) {
                    return std::find(body.states.begin(), body.states.end(), s) != body.states.end();
                };
                if (!has(body.initial)) {
                    throw SpecError("initial state '" + body.initial + "' undeclared in " + spec.name);
                }
                for (const auto& f : body.finals) {
                    if (!has(f)) {
                        throw SpecError("final state '" + f + "' undeclared in " + spec.name);
                    }
                }
                for (const auto& t : body.transitions) {
                    if (!has(t.source) || !has(t.target)) {
                        throw SpecError("transition with undeclared state in " + spec.name);
                    }
                }
            } else if constexpr (std::is_same_v<T, Flow>) {
                if (!body.left || !body.right) {
                    throw SpecError("flow " + spec.name + " is missing a sub-specification");
                }
                check_node(lib, *body.left, call_stack);
                check_node(lib, *body.right, call_stack);
            } else if constexpr (std::is_same_v<T, QFlow> || std::is_same_v<T, QInterleave>) {
                if (seen.count(body.var) != 0) {
                    throw SpecError("quantified variable '" + body.var + "' shadows an attribute of " +
                                    spec.name);
                }
                if (!body.body) {
                    throw SpecError(spec.name + " has no body");
                }
                check_node(lib, *body.body, call_stack);
            } else {
                if (std::find(call_stack.begin(), call_stack.end(), body.callee) != call_stack.end()) {
                    throw SpecError("recursive call to '" + body.callee + "'");
                }
                const AstdSpec& callee = lib.resolve(body.callee);
                if (callee.params.size() != body.arguments.size()) {
                    throw SpecError("call to '" + body.callee + "' passes " +
                                    std::to_string(body.arguments.size()) + " arguments, expected " +
                                    std::to_string(callee.params.size()));
                }
                call_stack.push_back(body.callee);
                check_node(lib, callee, call_stack);
                call_stack.pop_back();
            }
        },
        spec.body);
}

} // namespace

void SpecLibrary::validate(const std::string& root) const {
    std::vector<std::string> stack{root};
    check_node(*this, resolve(root), stack);
}

} // namespace astd::engine
