#pragma once

// The 3D locus of points whose distances to the reference frame realize a
// fixed similarity class: a circle orthogonal to the base plane with diameter
// P P'. The base plane is embedded as z = 0 with the same frame as the planar
// modules.

#include <utility>

#include "core.hpp"
#include "pompeiu.hpp"

namespace trimoduli::space3 {

struct Point3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator-(Point3 p) { return {-p.x, -p.y, -p.z}; }
inline Point3 operator*(double s, Point3 p) { return {s * p.x, s * p.y, s * p.z}; }
inline double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Point3 cross(Point3 a, Point3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(Point3 p) { return dot(p, p); }
inline double norm(Point3 p) { return std::sqrt(norm2(p)); }
inline double dist(Point3 a, Point3 b) { return norm(a - b); }

struct Circle3 {
    Point3 center;
    double radius = 1.0;
    Point3 planeNormal;  // unit normal of the plane containing the circle
};

struct Sphere {
    Point3 center;
    double radius = 1.0;
};

/// The circle of all 3D points realizing the class of the side triple:
/// diameter from P to P', in the vertical plane through the origin and P.
inline Circle3 similarity_circle(const shape::SideLengths& s, Tolerance tol = {}) {
    pompeiu::PompeiuSolution sol = pompeiu::solve(s, tol);
    if (!sol.pPrime)
        throw DomainError("equilateral class: the locus degenerates (P' at infinity)", "sides");
    Point mid = 0.5 * (sol.p + *sol.pPrime);
    Point u = normalized(mid);  // P and P' lie on the same ray from the origin
    return {{mid.x, mid.y, 0.0},
            0.5 * dist(sol.p, *sol.pPrime),
            {-u.y, u.x, 0.0}};
}

/// Apollonius foci of a similarity circle: the two points where the unit
/// circle meets the circle's vertical plane.
inline std::pair<Point3, Point3> foci(const Circle3& c) {
    Point dir{c.center.x, c.center.y};
    if (!(norm2(dir) > 0.0)) throw DomainError("circle center must be off the vertical axis");
    Point u = normalized(dir);
    Point3 w{u.x, u.y, 0.0};
    return {w, -w};
}

inline Point3 sphere_invert(const Sphere& s, Point3 p) {
    Point3 d = p - s.center;
    double d2 = norm2(d);
    if (!(d2 > 0.0)) throw DomainError("inversion of the sphere center: image at infinity");
    return s.center + (s.radius * s.radius / d2) * d;
}

/// Point at angle t on the circle, using a deterministic in-plane frame.
/// For similarity circles the second basis vector is +z, so t = pi/2 is the
/// topmost point of the diameter circle.
inline Point3 sample_circle(const Circle3& c, double t) {
    Point3 ez{0.0, 0.0, 1.0};
    Point3 e1 = cross(c.planeNormal, ez);
    if (norm2(e1) < 1e-12) e1 = cross(c.planeNormal, Point3{1.0, 0.0, 0.0});
    e1 = (1.0 / norm(e1)) * e1;
    Point3 e2 = cross(e1, c.planeNormal);
    return c.center + c.radius * (std::cos(t) * e1 + std::sin(t) * e2);
}

}  // namespace trimoduli::space3
