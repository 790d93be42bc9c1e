#pragma once

// Constructive solver for the interior/exterior points whose distances to the
// reference frame realize a given side-length triple. Works purely through the
// Apollonius-intersection construction so it can serve as an independent
// oracle for the closed-form shape coordinate.

#include <optional>

#include "core.hpp"
#include "geom2.hpp"
#include "shape.hpp"

namespace trimoduli::pompeiu {

struct PompeiuSolution {
    Point p;                       // inside the unit disc
    std::optional<Point> pPrime;   // outside; absent for the equilateral class
    bool nearEquilateral = false;
};

/// Inversion of an interior point in the unit circle: p / |p|^2.
inline Point exterior_from_interior(Point p) {
    double n2 = norm2(p);
    if (!(n2 > 0.0)) throw DomainError("exterior point at infinity (equilateral class)");
    if (!(n2 < 1.0)) throw DomainError("point must lie strictly inside the unit disc", "P");
    return (1.0 / n2) * p;
}

namespace detail {

/// Largest relative drift of dist(p, A0)/a etc. from a common ratio.
inline double ratio_residual(Point p, const shape::SideLengths& s) {
    double r1 = dist(p, shape::A0) / s.a;
    double r2 = dist(p, shape::B0) / s.b;
    double r3 = dist(p, shape::C0) / s.c;
    double mean = (r1 + r2 + r3) / 3.0;
    return std::max({std::abs(r1 - mean), std::abs(r2 - mean), std::abs(r3 - mean)}) / mean;
}

}  // namespace detail

/// Intersects the inverted Apollonius circles centered at B0 and C0 (radii
/// sqrt(3) b/a and sqrt(3) c/a), splits the pair across the line B0 C0, and
/// pulls both points back through the inversion centered at A0.
inline PompeiuSolution solve(const shape::SideLengths& s, Tolerance tol = {}) {
    geom2::Circle imageB{shape::B0, shape::sqrt3 * s.b / s.a};
    geom2::Circle imageC{shape::C0, shape::sqrt3 * s.c / s.a};
    auto pts = geom2::circle_circle_intersection(imageB, imageC, tol);
    if (pts.size() != 2)
        throw InternalError("inverted Apollonius circles of a valid triple failed to intersect");

    // Both centers sit on y = -1/2, so the pair straddles the line B0 C0.
    Point below = pts[0];
    Point above = pts[1];
    if (!(below.y < -0.5 && above.y > -0.5))
        throw InternalError("intersection pair does not straddle the line B0 C0");

    geom2::Circle inv{shape::A0, shape::sqrt3};
    PompeiuSolution sol;
    sol.p = geom2::invert_point(inv, below);

    if (!(norm2(sol.p) < 1.0)) throw InternalError("interior point left the moduli disc");
    if (detail::ratio_residual(sol.p, s) > 1e-9)
        throw InternalError("distance ratios of the interior point drifted from a:b:c");

    if (dist(above, shape::A0) < 1e-9) {
        sol.nearEquilateral = true;  // P~' at the inversion center: exterior point at infinity
        return sol;
    }
    Point pp = geom2::invert_point(inv, above);
    if (!(norm2(pp) > 1.0)) throw InternalError("exterior point entered the moduli disc");
    if (detail::ratio_residual(pp, s) > 1e-9)
        throw InternalError("distance ratios of the exterior point drifted from a:b:c");
    if (dist(pp, exterior_from_interior(sol.p)) > 1e-9 * norm(pp))
        throw InternalError("exterior point is not the unit-circle inversion of the interior point");
    sol.pPrime = pp;
    return sol;
}

}  // namespace trimoduli::pompeiu
