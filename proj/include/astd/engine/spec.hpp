#pragma once

#include "astd/engine/env.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace astd::engine {

struct Event {
    std::string name;
    std::vector<Value> args;
};

using Expr = std::function<Value(const Env&)>;
// Guards must not have side effects; they see the enclosing environment
// overridden by local attributes and pattern captures.
using Guard = std::function<bool(const Env&)>;
// Actions read and write the same combined environment.
using Action = std::function<void(Env&)>;

Expr var(Var name);
Expr constant(Value v);

struct Bound {
    Expr expr;
};

// `?name: kind` in a pattern.
struct Capture {
    Var name;
    ValueKind kind;
};

using Slot = std::variant<Bound, Capture>;

struct EventPattern {
    std::string name;
    std::vector<Slot> slots;
};

// Returns the captured bindings when `pattern` matches `event` under `env`.
std::optional<Env> match(const EventPattern& pattern, const Event& event, const Env& env);

struct Transition {
    std::string source;
    EventPattern pattern;
    Guard guard;   // empty means `true`
    Action action; // empty means `skip`
    std::string target;
};

struct Attribute {
    Var name;
    std::function<Value()> initial;
};

struct AstdSpec;
using SpecPtr = std::shared_ptr<const AstdSpec>;

struct Automaton {
    std::vector<std::string> states;
    std::string initial;
    std::set<std::string> finals;
    std::vector<Transition> transitions;
};

struct Flow {
    SpecPtr left;
    SpecPtr right;
};

struct QFlow {
    Var var;
    std::vector<Value> domain;
    SpecPtr body;
};

struct QInterleave {
    Var var;
    // nullopt is the unbounded domain: instances are created on first use.
    std::optional<std::vector<Value>> domain;
    SpecPtr body;
    // Index of the event argument that carries the value of `var`.
    std::size_t routing_slot = 0;
};

struct Call {
    std::string callee;
    std::vector<Expr> arguments;
};

using Body = std::variant<Automaton, Flow, QFlow, QInterleave, Call>;

struct AstdSpec {
    std::string name;
    std::vector<Var> params;
    std::vector<Attribute> attrs;
    Action astd_action;
    Body body;

    VarSet attribute_names() const;
    std::string_view kind() const;
};

SpecPtr make_spec(std::string name, Body body, std::vector<Attribute> attrs = {},
                  Action astd_action = {}, std::vector<Var> params = {});

// Named specifications that Call nodes refer to.
class SpecLibrary {
public:
    void add(SpecPtr spec);
    const AstdSpec& resolve(const std::string& name) const;
    bool contains(const std::string& name) const { return specs_.count(name) != 0; }

    // Checks every tree reachable from `root`: unique attributes, quantified
    // variables not shadowing attributes, automaton states, call targets and
    // arity, and absence of recursive calls. Throws SpecError.
    void validate(const std::string& root) const;

private:
    std::map<std::string, SpecPtr> specs_;
};

} // namespace astd::engine
