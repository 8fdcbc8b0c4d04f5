#include "astd/engine/value.hpp"

#include "astd/common/errors.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

namespace astd::engine {

std::string_view kind_name(ValueKind kind) {
    switch (kind) {
    case ValueKind::Integer: return "int";
    case ValueKind::Real: return "real";
    case ValueKind::Boolean: return "bool";
    case ValueKind::Text: return "string";
    case ValueKind::Timestamp: return "timestamp";
    case ValueKind::Opaque: return "opaque";
    case ValueKind::List: return "list";
    case ValueKind::Map: return "map";
    }
    return "?";
}

namespace {

template <class T>
const T& expect(const auto& data, ValueKind wanted) {
    if (const auto* p = std::get_if<T>(&data)) {
        return *p;
    }
    throw Error("value is not of kind " + std::string(kind_name(wanted)));
}

} // namespace

std::int64_t Value::as_int() const { return expect<std::int64_t>(data_, ValueKind::Integer); }
double Value::as_real() const {
    if (const auto* i = std::get_if<std::int64_t>(&data_)) {
        return static_cast<double>(*i);
    }
    return expect<double>(data_, ValueKind::Real);
}
bool Value::as_bool() const { return expect<bool>(data_, ValueKind::Boolean); }
const std::string& Value::as_text() const { return expect<std::string>(data_, ValueKind::Text); }
Timestamp Value::as_timestamp() const { return expect<Timestamp>(data_, ValueKind::Timestamp); }
const Handle& Value::as_handle() const { return expect<Handle>(data_, ValueKind::Opaque); }
Handle& Value::as_handle() {
    if (auto* p = std::get_if<Handle>(&data_)) {
        return *p;
    }
    throw Error("value is not of kind opaque");
}
const Value::List& Value::as_list() const { return expect<List>(data_, ValueKind::List); }
const Value::Map& Value::as_map() const { return expect<Map>(data_, ValueKind::Map); }

bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

bool operator<(const Value& a, const Value& b) {
    if (a.data_.index() != b.data_.index()) {
        return a.data_.index() < b.data_.index();
    }
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.data_);
            if constexpr (std::is_same_v<T, Handle>) {
                return std::less<const Object*>{}(lhs.get(), rhs.get());
            } else {
                return lhs < rhs;
            }
        },
        a.data_);
}

std::ostream& operator<<(std::ostream& out, const Value& v) {
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                out << x;
            } else if constexpr (std::is_same_v<T, double>) {
                std::ostringstream tmp;
                tmp << std::setprecision(17) << x;
                out << tmp.str();
            } else if constexpr (std::is_same_v<T, bool>) {
                out << (x ? "true" : "false");
            } else if constexpr (std::is_same_v<T, std::string>) {
                out << std::quoted(x);
            } else if constexpr (std::is_same_v<T, Timestamp>) {
                out << "@" << format_timestamp(x, "%Y-%m-%dT%H:%M:%S");
            } else if constexpr (std::is_same_v<T, Handle>) {
                if (x.empty()) {
                    out << "<null>";
                } else {
                    out << "<" << x.get()->type_name() << " ";
                    x.get()->describe(out);
                    out << ">";
                }
            } else if constexpr (std::is_same_v<T, Value::List>) {
                out << "[";
                for (std::size_t i = 0; i < x.size(); ++i) {
                    out << (i ? ", " : "") << x[i];
                }
                out << "]";
            } else {
                out << "{";
                bool first = true;
                for (const auto& [k, val] : x) {
                    out << (first ? "" : ", ") << std::quoted(k) << ": " << val;
                    first = false;
                }
                out << "}";
            }
        },
        v.data_);
    return out;
}

std::string to_string(const Value& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

} // namespace astd::engine
