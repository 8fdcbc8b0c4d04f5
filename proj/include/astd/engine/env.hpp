#pragma once

#include "astd/engine/value.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace astd::engine {

using Var = std::string;
using VarSet = std::set<Var>;

// Finite map from variable names to values.
class Env {
public:
    Env() = default;
    Env(std::initializer_list<std::pair<const Var, Value>> init) : bindings_(init) {}

    bool contains(const Var& name) const { return bindings_.count(name) != 0; }
    std::size_t size() const { return bindings_.size(); }
    bool empty() const { return bindings_.empty(); }

    // Throws Error if `name` is unbound.
    const Value& at(const Var& name) const;
    std::optional<Value> find(const Var& name) const;

    // Adds or replaces a binding.
    void bind(const Var& name, Value value) { bindings_[name] = std::move(value); }
    // Replaces an existing binding; actions use this so a misspelt
    // attribute is an error instead of a silently new variable.
    void assign(const Var& name, Value value);
    void erase(const Var& name) { bindings_.erase(name); }

    template <class T>
    const T& object(const Var& name) const {
        return at(name).as_handle().as<T>();
    }
    template <class T>
    T& mutate(const Var& name) {
        return mutable_at(name).as_handle().mutate<T>();
    }

    // this ⊕ other: bindings of `other` win.
    Env override_with(const Env& other) const;
    // V ◁ this: keep only variables in `vars`.
    Env restrict_to(const VarSet& vars) const;
    // V ⩤ this: drop variables in `vars`.
    Env subtract(const VarSet& vars) const;

    VarSet domain() const;

    auto begin() const { return bindings_.begin(); }
    auto end() const { return bindings_.end(); }

    friend bool operator==(const Env& a, const Env& b) { return a.bindings_ == b.bindings_; }

private:
    Value& mutable_at(const Var& name);

    std::map<Var, Value> bindings_;
};

std::ostream& operator<<(std::ostream& out, const Env& env);

} // namespace astd::engine
