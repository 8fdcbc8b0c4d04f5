#pragma once

#include "astd/common/timestamp.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <typeinfo>
#include <variant>
#include <vector>

namespace astd::engine {

// Engine-managed object reachable from an attribute (a window, a detector
// map, ...). Objects are shared between state snapshots and copied on write
// through Handle::mutate, so a failed step never disturbs committed state.
class Object {
public:
    virtual ~Object() = default;
    virtual std::unique_ptr<Object> clone() const = 0;
    virtual std::string_view type_name() const = 0;
    // Canonical text used by state dumps.
    virtual void describe(std::ostream& out) const = 0;
};

class Handle {
public:
    Handle() = default;
    explicit Handle(std::shared_ptr<Object> object) : object_(std::move(object)) {}

    template <class T, class... Args>
    static Handle make(Args&&... args) {
        return Handle(std::make_shared<T>(std::forward<Args>(args)...));
    }

    bool empty() const { return object_ == nullptr; }
    const Object* get() const { return object_.get(); }

    template <class T>
    const T& as() const {
        auto* typed = dynamic_cast<const T*>(object_.get());
        if (typed == nullptr) {
            throw std::bad_cast();
        }
        return *typed;
    }

    // Returns a writable reference, detaching from other snapshots first.
    template <class T>
    T& mutate() {
        if (object_.use_count() > 1) {
            object_ = std::shared_ptr<Object>(object_->clone());
        }
        auto* typed = dynamic_cast<T*>(object_.get());
        if (typed == nullptr) {
            throw std::bad_cast();
        }
        return *typed;
    }

    // Identity comparison.
    friend bool operator==(const Handle& a, const Handle& b) { return a.object_ == b.object_; }

private:
    std::shared_ptr<Object> object_;
};

enum class ValueKind { Integer, Real, Boolean, Text, Timestamp, Opaque, List, Map };

std::string_view kind_name(ValueKind kind);

class Value {
public:
    using List = std::vector<Value>;
    using Map = std::map<std::string, Value>;

    Value() : data_(std::int64_t{0}) {}
    Value(std::int64_t v) : data_(v) {}
    Value(int v) : data_(std::int64_t{v}) {}
    Value(double v) : data_(v) {}
    Value(bool v) : data_(v) {}
    Value(std::string v) : data_(std::move(v)) {}
    Value(const char* v) : data_(std::string(v)) {}
    Value(Timestamp v) : data_(v) {}
    Value(Handle v) : data_(std::move(v)) {}
    Value(List v) : data_(std::move(v)) {}
    Value(Map v) : data_(std::move(v)) {}

    ValueKind kind() const { return static_cast<ValueKind>(data_.index()); }

    bool is(ValueKind k) const { return kind() == k; }

    std::int64_t as_int() const;
    double as_real() const;
    bool as_bool() const;
    const std::string& as_text() const;
    Timestamp as_timestamp() const;
    const Handle& as_handle() const;
    Handle& as_handle();
    const List& as_list() const;
    const Map& as_map() const;

    friend bool operator==(const Value& a, const Value& b);
    // Total order used for domain sets and instance maps: by kind first,
    // then by payload. Opaque handles order by address.
    friend bool operator<(const Value& a, const Value& b);

    friend std::ostream& operator<<(std::ostream& out, const Value& v);

private:
    std::variant<std::int64_t, double, bool, std::string, Timestamp, Handle, List, Map> data_;
};

std::string to_string(const Value& v);

} // namespace astd::engine
