#pragma once

// Minkowski 4-space model of the inversive plane: points lift to the light
// cone, oriented circles and lines to the unit quadric (de Sitter space). The
// Lorentz inner product of two lifts reads off cosh(lambda) for nested
// co-pencil circles and cos(theta) for intersecting ones.

#include "core.hpp"
#include "geom2.hpp"

namespace trimoduli::desitter {

struct MinkowskiVector {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

/// Unit-norm point of the quadric <x,x> = 1 representing an oriented circle.
struct DeSitterPoint {
    MinkowskiVector gamma;
};

/// +1 = anticlockwise for circles; for lines, +1 = normal on the left of travel.
struct OrientedCircle {
    geom2::GeneralizedCircle geo;
    int orientation = 1;
};

/// Lorentz form of signature (-,+,+,+).
inline double minkowski_inner(const MinkowskiVector& u, const MinkowskiVector& v) {
    return -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3;
}

/// Lightlike representative of a plane point: ((1+|p|^2)/2, (1-|p|^2)/2, p).
inline MinkowskiVector lift_point(Point p) {
    double n2 = norm2(p);
    return {(1.0 + n2) / 2.0, (1.0 - n2) / 2.0, p.x, p.y};
}

/// Unit-norm lift of an oriented circle or line; reversing orientation negates it.
inline DeSitterPoint lift_circle(const OrientedCircle& c) {
    if (c.orientation != 1 && c.orientation != -1)
        throw DomainError("orientation must be +1 or -1", "orientation");
    MinkowskiVector g;
    if (const auto* circ = std::get_if<geom2::Circle>(&c.geo)) {
        if (!(circ->radius > 0.0)) throw DomainError("circle radius must be positive", "radius");
        double m = norm2(circ->center);
        double r = circ->radius;
        g = {(1.0 + m - r * r) / (2.0 * r), (1.0 - m + r * r) / (2.0 * r),
             circ->center.x / r, circ->center.y / r};
    } else {
        const auto& l = std::get<geom2::Line>(c.geo);
        g = {l.offset, -l.offset, l.normal.x, l.normal.y};
    }
    if (c.orientation == -1) g = {-g.x0, -g.x1, -g.x2, -g.x3};
    return {g};
}

namespace detail {

/// acosh via log1p, stable as the argument approaches 1.
inline double acosh_stable(double x) {
    double u = x - 1.0;
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

}  // namespace detail

/// Geodesic separation lambda >= 0 of two non-intersecting co-pencil circles
/// with consistent orientation: <g1,g2> = cosh(lambda). For concentric circles
/// this is |log(r2/r1)|.
inline double poncelet_separation(const OrientedCircle& c1, const OrientedCircle& c2,
                                  Tolerance tol = {}) {
    double ip = minkowski_inner(lift_circle(c1).gamma, lift_circle(c2).gamma);
    if (ip < 1.0 - tol.rel)
        throw DomainError("circles intersect or orientations are inconsistent");
    return detail::acosh_stable(std::max(ip, 1.0));
}

/// Intersection angle theta in [0, pi] of two oriented circles: <g1,g2> = cos(theta).
inline double intersection_angle(const OrientedCircle& c1, const OrientedCircle& c2,
                                 Tolerance tol = {}) {
    double ip = minkowski_inner(lift_circle(c1).gamma, lift_circle(c2).gamma);
    if (std::abs(ip) > 1.0 + tol.rel) throw DomainError("circles are disjoint");
    return std::acos(std::clamp(ip, -1.0, 1.0));
}

/// Lightlike incidence: p lies on the circle iff <lift_point(p), gamma> = 0.
inline bool point_on_circle_test(Point p, const OrientedCircle& c, Tolerance tol = {}) {
    MinkowskiVector psi = lift_point(p);
    MinkowskiVector g = lift_circle(c).gamma;
    double ip = minkowski_inner(psi, g);
    double scale = std::sqrt(psi.x0 * psi.x0 + psi.x1 * psi.x1 + psi.x2 * psi.x2 + psi.x3 * psi.x3) *
                   std::sqrt(g.x0 * g.x0 + g.x1 * g.x1 + g.x2 * g.x2 + g.x3 * g.x3);
    return tol.zero(ip, scale);
}

/// Unit tangent at a point of the locus, following the orientation.
inline Point oriented_tangent(const OrientedCircle& c, Point at) {
    Point t;
    if (const auto* circ = std::get_if<geom2::Circle>(&c.geo)) {
        t = normalized(perp(at - circ->center));
    } else {
        const auto& l = std::get<geom2::Line>(c.geo);
        t = {l.normal.y, -l.normal.x};
    }
    return c.orientation == 1 ? t : -t;
}

}  // namespace trimoduli::desitter
