#pragma once

// Request parsing for the CLI: points as [x,y], triangles as {"A":..,"B":..,"C":..}
// (a bare three-point array is also accepted), sides as [a,b,c]. Violations
// surface as DomainError with the offending field attached.

#include <json.hpp>

#include <string>

#include "core.hpp"
#include "shape.hpp"

namespace trimoduli::jsonin {

using nlohmann::json;

inline double get_number(const json& j, const std::string& field) {
    if (!j.is_number()) throw DomainError("expected a number", field);
    return j.get<double>();
}

inline Point get_point(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw DomainError("expected a point as [x, y]", field);
    return {j[0].get<double>(), j[1].get<double>()};
}

inline shape::SideLengths get_sides(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3)
        throw DomainError("expected side lengths as [a, b, c]", field);
    return {get_number(j[0], field), get_number(j[1], field), get_number(j[2], field)};
}

inline shape::Triangle get_triangle(const json& j, const std::string& field) {
    if (j.is_object()) {
        if (!j.contains("A") || !j.contains("B") || !j.contains("C"))
            throw DomainError("triangle object needs fields A, B, C", field);
        return {get_point(j["A"], field + ".A"), get_point(j["B"], field + ".B"),
                get_point(j["C"], field + ".C")};
    }
    if (j.is_array() && j.size() == 3)
        return {get_point(j[0], field), get_point(j[1], field), get_point(j[2], field)};
    throw DomainError("expected a triangle as {\"A\":[..],\"B\":[..],\"C\":[..]}", field);
}

inline const json& require(const json& j, const std::string& field) {
    if (!j.contains(field)) throw DomainError("missing required field", field);
    return j.at(field);
}

inline json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("input is not valid JSON");
    return j;
}

}  // namespace trimoduli::jsonin
