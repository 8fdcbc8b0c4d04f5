#include "astd/engine/env.hpp"

#include "astd/common/errors.hpp"

namespace astd::engine {

const Value& Env::at(const Var& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) {
        throw Error("unbound variable '" + name + "'");
    }
    return it->second;
}

Value& Env::mutable_at(const Var& name) {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) {
        throw Error("unbound variable '" + name + "'");
    }
    return it->second;
}

std::optional<Value> Env::find(const Var& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void Env::assign(const Var& name, Value value) { mutable_at(name) = std::move(value); }

Env Env::override_with(const Env& other) const {
    Env out = *this;
    for (const auto& [k, v] : other.bindings_) {
        out.bindings_[k] = v;
    }
    return out;
}

Env Env::restrict_to(const VarSet& vars) const {
    Env out;
    for (const auto& [k, v] : bindings_) {
        if (vars.count(k) != 0) {
            out.bindings_.emplace(k, v);
        }
    }
    return out;
}

Env Env::subtract(const VarSet& vars) const {
    Env out;
    for (const auto& [k, v] : bindings_) {
        if (vars.count(k) == 0) {
            out.bindings_.emplace(k, v);
        }
    }
    return out;
}

VarSet Env::domain() const {
    VarSet out;
    for (const auto& [k, v] : bindings_) {
        out.insert(k);
    }
    return out;
}

std::ostream& operator<<(std::ostream& out, const Env& env) {
    out << "{";
    bool first = true;
    for (const auto& [k, v] : env) {
        out << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    return out << "}";
}

} // namespace astd::engine
