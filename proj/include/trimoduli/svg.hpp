#pragma once

// Deterministic SVG figures: pencils of circles, moduli-disc orbits, cevian
// constructions, and the section view of 3D similarity circles. Mathematical
// orientation (y up) via a top-level flip; every pencil member is exactly one
// path element.

#include <cstdio>
#include <string>
#include <vector>

#include "cevian.hpp"
#include "classops.hpp"
#include "core.hpp"
#include "geom2.hpp"
#include "shape.hpp"
#include "space3.hpp"

namespace trimoduli::svg {

namespace detail {

inline std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string circle_path(const geom2::Circle& c) {
    std::string r = num(c.radius);
    std::string cy = num(c.center.y);
    return "M " + num(c.center.x + c.radius) + " " + cy + " A " + r + " " + r + " 0 1 0 " +
           num(c.center.x - c.radius) + " " + cy + " A " + r + " " + r + " 0 1 0 " +
           num(c.center.x + c.radius) + " " + cy + " Z";
}

inline std::string line_path(const geom2::Line& l, double extent) {
    Point p0 = l.offset * l.normal;
    Point dir = perp(l.normal);
    // slab clip against the square [-extent, extent]^2
    double tmin = -1e9, tmax = 1e9;
    auto clip = [&](double p, double d) {
        if (std::abs(d) < 1e-12) return std::abs(p) <= extent;
        double t1 = (-extent - p) / d, t2 = (extent - p) / d;
        if (t1 > t2) std::swap(t1, t2);
        tmin = std::max(tmin, t1);
        tmax = std::min(tmax, t2);
        return true;
    };
    bool inside = clip(p0.x, dir.x) && clip(p0.y, dir.y) && tmin <= tmax;
    if (!inside) {
        tmin = -extent;
        tmax = extent;
    }
    Point a = p0 + tmin * dir;
    Point b = p0 + tmax * dir;
    return "M " + num(a.x) + " " + num(a.y) + " L " + num(b.x) + " " + num(b.y);
}

inline std::string member_path(const geom2::GeneralizedCircle& g, double extent) {
    if (const auto* c = std::get_if<geom2::Circle>(&g)) return circle_path(*c);
    return line_path(std::get<geom2::Line>(g), extent);
}

inline void path_element(std::string& out, const std::string& d, const char* stroke) {
    out += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + stroke +
           "\" stroke-width=\"0.012\"/>\n";
}

inline void dot(std::string& out, Point p, const char* cls, const char* fill,
                double radius = 0.035) {
    out += "  <circle class=\"" + std::string(cls) + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
           "\" r=\"" + num(radius) + "\" fill=\"" + fill + "\"/>\n";
}

inline void segment(std::string& out, Point a, Point b, const char* stroke) {
    out += "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
           "\" y2=\"" + num(b.y) + "\" stroke=\"" + std::string(stroke) +
           "\" stroke-width=\"0.01\"/>\n";
}

inline std::string document(const std::string& body, double x, double y, double w, double h) {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x) + " " +
                      num(y) + " " + num(w) + " " + num(h) + "\" width=\"480\" height=\"480\">\n";
    out += "<g transform=\"scale(1,-1)\">\n";
    out += body;
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace detail

/// Hyperbolic pencil (black) and elliptic pencil (blue) with the given foci,
/// membersPerFamily paths each.
inline std::string pencil(Point f1, Point f2, int membersPerFamily, Tolerance tol = {}) {
    if (membersPerFamily < 1) throw DomainError("need at least one member per family", "members");
    if (!(dist(f1, f2) > 0.0)) throw DomainError("pencil foci coincide", "foci");
    const double extent = 2.0;
    std::string body;
    int n = membersPerFamily;
    for (int j = 0; j < n; ++j) {
        double s = n == 1 ? 0.0 : -1.2 + 2.4 * j / (n - 1);
        auto member = geom2::apollonius_circle(f1, f2, std::exp(s), tol);
        detail::path_element(body, detail::member_path(member, extent), "black");
    }
    Point mid = 0.5 * (f1 + f2);
    Point axis = normalized(perp(f2 - f1));
    double span = 0.5 * dist(f1, f2);
    geom2::Pencil ell{geom2::PencilKind::Elliptic, f1, f2};
    for (int j = 0; j < n; ++j) {
        double h = std::tan(-pi / 2.0 + pi * (j + 1) / (n + 1.0));
        Point through = mid + (h * span) * axis;
        auto member = geom2::pencil_member(ell, through, tol);
        detail::path_element(body, detail::member_path(member, extent), "blue");
    }
    detail::dot(body, f1, "focus", "black");
    detail::dot(body, f2, "focus", "black");
    return detail::document(body, -extent, -extent, 2 * extent, 2 * extent);
}

/// Orbit of a class under `steps` equal rotation steps in the Pompeiu disc:
/// one marker per step on the circle of radius |z|.
inline std::string disc_orbit(const shape::ShapeClass& c, int steps) {
    if (steps < 1) throw DomainError("need at least one step", "steps");
    std::string body;
    body += "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" "
            "stroke-width=\"0.012\"/>\n";
    Point z = shape::pompeiu_coordinate(c);
    double zr = norm(z);
    if (zr > 0.0) {
        body += "  <circle cx=\"0\" cy=\"0\" r=\"" + detail::num(zr) +
                "\" fill=\"none\" stroke=\"gray\" stroke-width=\"0.006\" "
                "stroke-dasharray=\"0.05 0.03\"/>\n";
    }
    for (int j = 0; j < steps; ++j) {
        shape::ShapeClass moved = classops::rotate_class(c, 2.0 * pi * j / steps);
        detail::dot(body, shape::pompeiu_coordinate(moved), "marker", "crimson", 0.025);
    }
    return detail::document(body, -2.0, -2.0, 4.0, 4.0);
}

/// Cevian construction: the triangle, the cevian segments actually used by the
/// variant, and the resulting inner triangle.
inline std::string cevian_figure(const shape::Triangle& t, const std::string& variant, double p,
                                 double q) {
    std::string body;
    auto tri_path = [](const shape::Triangle& x) {
        return "M " + detail::num(x.A.x) + " " + detail::num(x.A.y) + " L " + detail::num(x.B.x) +
               " " + detail::num(x.B.y) + " L " + detail::num(x.C.x) + " " + detail::num(x.C.y) +
               " Z";
    };
    detail::path_element(body, tri_path(t), "black");

    Point app = q * t.B + (1.0 - q) * t.C;
    Point bpp = q * t.C + (1.0 - q) * t.A;
    Point cpp = q * t.A + (1.0 - q) * t.B;
    shape::Triangle inner = [&]() {
        if (variant == "tq") return cevian::t_q(t, q);
        if (variant == "routh") return cevian::routh(t, q);
        if (variant == "tpq") return cevian::t_pq(t, {p, q});
        throw DomainError("unknown cevian variant: " + variant, "variant");
    }();

    if (variant == "tq") {
        detail::dot(body, app, "division", "black", 0.02);
        detail::dot(body, bpp, "division", "black", 0.02);
        detail::dot(body, cpp, "division", "black", 0.02);
    } else {
        double pp = variant == "routh" ? 1.0 - q : p;
        detail::segment(body, t.A, app, "gray");
        detail::segment(body, t.B, bpp, "gray");
        detail::segment(body, t.C, cpp, "gray");
        Point appP = (1.0 - pp) * t.B + pp * t.C;
        Point bppP = (1.0 - pp) * t.C + pp * t.A;
        Point cppP = (1.0 - pp) * t.A + pp * t.B;
        if (dist(appP, app) > 1e-12) detail::segment(body, t.A, appP, "gray");
        if (dist(bppP, bpp) > 1e-12) detail::segment(body, t.B, bppP, "gray");
        if (dist(cppP, cpp) > 1e-12) detail::segment(body, t.C, cppP, "gray");
    }
    detail::path_element(body, tri_path(inner), "crimson");
    return detail::document(body, -2.0, -2.0, 4.0, 4.0);
}

/// Section view of the 3D similarity circle in its vertical plane: horizontal
/// axis is the trace of the base plane, the unit-circle foci sit at +-1.
inline std::string circle3d_figure(const shape::SideLengths& s) {
    space3::Circle3 c = space3::similarity_circle(s);
    double m = space3::norm(c.center);
    double reach = m + c.radius;
    double extent = std::max(1.5, 1.2 * reach);
    std::string body;
    detail::segment(body, {-extent, 0.0}, {extent, 0.0}, "black");
    detail::path_element(body, detail::circle_path({{m, 0.0}, c.radius}), "crimson");
    detail::dot(body, {1.0, 0.0}, "focus", "black");
    detail::dot(body, {-1.0, 0.0}, "focus", "black");
    detail::dot(body, {m - c.radius, 0.0}, "interior", "blue");
    detail::dot(body, {m + c.radius, 0.0}, "exterior", "blue");
    return detail::document(body, -extent, -extent, 2 * extent, 2 * extent);
}

}  // namespace trimoduli::svg
