#pragma once

// Shape coordinates of labeled, anticlockwise triangles: the cross-ratio
// coordinate sigma in the upper half plane, the disc coordinate phi, the
// side-length formulas, and the Pompeiu coordinate z = i * conj(w).

#include "core.hpp"
#include "geom2.hpp"

namespace trimoduli::shape {

inline const double sqrt3 = std::sqrt(3.0);

// Fixed reference frame: equilateral triangle A0 B0 C0 inscribed in the unit
// circle, rho the primitive 6th root of unity.
inline const Point A0{0.0, 1.0};
inline const Point B0{-sqrt3 / 2, -0.5};
inline const Point C0{sqrt3 / 2, -0.5};
inline const Cplx rho{0.5, sqrt3 / 2};
inline const Cplx rho_bar{0.5, -sqrt3 / 2};
inline const geom2::Circle gamma0{{0.0, 0.0}, 1.0};

/// Labeled triangle, anticlockwise by construction. Degenerate input (signed
/// area below 1e-12 x longest side squared) and clockwise input are rejected
/// with distinct errors; use orient() to repair orientation explicitly.
struct Triangle {
    Point A, B, C;

    Triangle(Point a, Point b, Point c) : A(a), B(b), C(c) {
        double l2 = std::max({norm2(B - C), norm2(C - A), norm2(A - B)});
        double area = 0.5 * cross(B - A, C - A);
        if (!(l2 > 0.0) || std::abs(area) < 1e-12 * l2)
            throw DomainError("degenerate triangle (collinear or coincident vertices)");
        if (area < 0.0) throw DomainError("clockwise vertex order (triangles are labeled anticlockwise)");
    }
};

/// Builds a triangle from three points in either orientation, swapping B and C
/// when the input is clockwise.
inline Triangle orient(Point a, Point b, Point c) {
    if (cross(b - a, c - a) < 0.0) std::swap(b, c);
    return Triangle(a, b, c);
}

/// Side lengths a=|B-C|, b=|C-A|, c=|A-B| with strict triangle inequalities.
struct SideLengths {
    double a, b, c;

    SideLengths(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
        if (!(a > 0.0 && b > 0.0 && c > 0.0) ||
            !(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)))
            throw DomainError("side lengths must be positive and finite", "sides");
        if (!(a < b + c && b < c + a && c < a + b))
            throw DomainError("triangle inequality violated", "sides");
    }

    bool equilateral(Tolerance tol = {}) const {
        return tol.close(a, b) && tol.close(b, c);
    }
};

/// Similarity class, stored canonically as the phi coordinate w with |w| < 1.
struct ShapeClass {
    Point w;

    explicit ShapeClass(Point w_) : w(w_) {
        if (!(norm2(w) < 1.0)) throw DomainError("shape coordinate outside the open unit disc");
    }
};

/// The Pompeiu coordinate z = i * conj(w). Involutive: the same formula maps z back to w.
inline Point pompeiu_coordinate(const ShapeClass& c) { return {c.w.y, c.w.x}; }

/// Class whose Pompeiu coordinate is z (w = i * conj(z), the inverse of the involution).
inline ShapeClass class_from_pompeiu(Point z) { return ShapeClass{{z.y, z.x}}; }

/// Cross-ratio coordinate sigma = (A-B)/(C-B), in the upper half plane for
/// anticlockwise triangles.
inline Point sigma(const Triangle& t) { return pt((cx(t.A) - cx(t.B)) / (cx(t.C) - cx(t.B))); }

/// sigma from side lengths: X = (a^2+c^2-b^2)/(2a^2), Y = sqrt(Heron product)/(2a^2).
inline Point sigma_of_sides(const SideLengths& s) {
    double a2 = s.a * s.a;
    double radicand = (s.a + s.b + s.c) * (-s.a + s.b + s.c) * (s.a - s.b + s.c) * (s.a + s.b - s.c);
    return {(a2 + s.c * s.c - s.b * s.b) / (2.0 * a2), std::sqrt(radicand) / (2.0 * a2)};
}

/// Moebius map (sigma - rho)/(sigma - conj(rho)) from the upper half plane onto the disc.
inline ShapeClass phi_from_sigma(Point s) {
    if (!(s.y > 0.0)) throw DomainError("sigma must lie in the open upper half plane", "sigma");
    return ShapeClass{pt((cx(s) - rho) / (cx(s) - rho_bar))};
}

/// Vertex form (A + rho^2 B + rho^4 C)/(A + rho^4 B + rho^2 C); agrees with
/// phi_from_sigma(sigma(t)).
inline ShapeClass phi(const Triangle& t) {
    Cplx rho2 = rho * rho;
    Cplx rho4 = rho2 * rho2;
    Cplx a = cx(t.A), b = cx(t.B), c = cx(t.C);
    return ShapeClass{pt((a + rho2 * b + rho4 * c) / (a + rho4 * b + rho2 * c))};
}

/// Closed form in the squared side lengths; the radicand is evaluated as the
/// Heron product, which equals the quartic expression without cancellation.
inline ShapeClass phi_of_sides(const SideLengths& s) {
    double a2 = s.a * s.a, b2 = s.b * s.b, c2 = s.c * s.c;
    double radicand = (s.a + s.b + s.c) * (-s.a + s.b + s.c) * (s.a - s.b + s.c) * (s.a + s.b - s.c);
    Cplx num{-2.0 * a2 + b2 + c2, sqrt3 * (b2 - c2)};
    double den = a2 + b2 + c2 + sqrt3 * std::sqrt(radicand);
    return ShapeClass{pt(num / den)};
}

inline SideLengths side_lengths(const Triangle& t) {
    return {dist(t.B, t.C), dist(t.C, t.A), dist(t.A, t.B)};
}

/// Class of the triangle with side lengths |p-A0|, |p-B0|, |p-C0| computed
/// through the distance triple. Kept independent of the closed form below.
inline ShapeClass class_from_point_via_distances(Point p) {
    if (!(norm2(p) < 1.0))
        throw DomainError("point on or outside the circumcircle gives a degenerate triple", "P");
    return phi_of_sides({dist(p, A0), dist(p, B0), dist(p, C0)});
}

/// Class of the point p of the moduli disc: w = i * conj(p). In debug builds the
/// distance route is evaluated too and disagreement raises an internal error.
inline ShapeClass class_from_point(Point p) {
    if (!(norm2(p) < 1.0))
        throw DomainError("point on or outside the circumcircle gives a degenerate triple", "P");
    ShapeClass closed{{p.y, p.x}};
#ifndef NDEBUG
    ShapeClass byDistances = class_from_point_via_distances(p);
    if (dist(closed.w, byDistances.w) > 1e-9)
        throw InternalError("distance route disagrees with closed-form shape coordinate");
#endif
    return closed;
}

}  // namespace trimoduli::shape
