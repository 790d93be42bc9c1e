#pragma once

// Deterministic JSON emitter for command results: insertion-ordered objects,
// doubles printed with 17 significant digits so every value round-trips.

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core.hpp"

namespace trimoduli::jsonout {

class Value;
using Member = std::pair<std::string, Value>;

class Value {
public:
    using Array = std::vector<Value>;
    using Object = std::vector<Member>;

    Value() : v_(nullptr) {}
    Value(std::nullptr_t) : v_(nullptr) {}
    Value(bool b) : v_(b) {}
    Value(int i) : v_(static_cast<std::int64_t>(i)) {}
    Value(std::int64_t i) : v_(i) {}
    Value(std::uint64_t i) : v_(static_cast<std::int64_t>(i)) {}
    Value(double d) : v_(d) {}
    Value(const char* s) : v_(std::string(s)) {}
    Value(std::string s) : v_(std::move(s)) {}
    Value(Array a) : v_(std::move(a)) {}
    Value(Object o) : v_(std::move(o)) {}
    Value(Point p) : v_(Array{Value(p.x), Value(p.y)}) {}

    const auto& raw() const { return v_; }

private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> v_;
};

namespace detail {

inline std::string format_double(double d) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

inline void escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

inline void dump_into(std::string& out, const Value& v, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string closePad(2 * depth, ' ');
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::nullptr_t>) {
                out += "null";
            } else if constexpr (std::is_same_v<T, bool>) {
                out += x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                out += std::to_string(x);
            } else if constexpr (std::is_same_v<T, double>) {
                out += format_double(x);
            } else if constexpr (std::is_same_v<T, std::string>) {
                escape_into(out, x);
            } else if constexpr (std::is_same_v<T, Value::Array>) {
                if (x.empty()) {
                    out += "[]";
                    return;
                }
                out += '[';
                for (std::size_t i = 0; i < x.size(); ++i) {
                    out += i ? ", " : "";
                    dump_into(out, x[i], depth);
                }
                out += ']';
            } else {
                if (x.empty()) {
                    out += "{}";
                    return;
                }
                out += "{\n";
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (i) out += ",\n";
                    out += pad;
                    escape_into(out, x[i].first);
                    out += ": ";
                    dump_into(out, x[i].second, depth + 1);
                }
                out += '\n';
                out += closePad;
                out += '}';
            }
        },
        v.raw());
}

}  // namespace detail

inline std::string dump(const Value& v) {
    std::string out;
    detail::dump_into(out, v, 0);
    out += '\n';
    return out;
}

}  // namespace trimoduli::jsonout
