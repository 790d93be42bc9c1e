#pragma once

// Planar inversive geometry: circles, lines, inversions, Apollonius circles,
// and pencils. Lines are kept first-class (not huge-radius circles) so the
// bisector Apollonius case and inversion images through the center are exact.

#include <algorithm>
#include <variant>
#include <vector>

#include "core.hpp"

namespace trimoduli::geom2 {

struct Circle {
    Point center;
    double radius = 1.0;  // strictly positive
};

/// The locus normal . x = offset, with |normal| = 1.
struct Line {
    Point normal;
    double offset = 0.0;
};

using GeneralizedCircle = std::variant<Circle, Line>;

enum class PencilKind { Hyperbolic, Elliptic };

/// Hyperbolic: Apollonius circles with limit points omega, omegaBar.
/// Elliptic: circles through base points omega, omegaBar.
struct Pencil {
    PencilKind kind;
    Point omega;
    Point omegaBar;
};

inline Line make_line(Point normal, double offset) {
    double n = norm(normal);
    if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("line normal must be nonzero");
    return {{normal.x / n, normal.y / n}, offset / n};
}

/// Signed residual of membership: |p-center|-radius for circles, n.p-d for lines.
inline double signed_residual(const GeneralizedCircle& g, Point p) {
    if (const auto* c = std::get_if<Circle>(&g)) return dist(p, c->center) - c->radius;
    const auto& l = std::get<Line>(g);
    return dot(l.normal, p) - l.offset;
}

/// Unoriented tangent direction at a point of the locus (unit length).
inline Point tangent_at(const GeneralizedCircle& g, Point at) {
    if (const auto* c = std::get_if<Circle>(&g)) return normalized(perp(at - c->center));
    const auto& l = std::get<Line>(g);
    return {l.normal.y, -l.normal.x};
}

/// I_{Gamma(eta,r)}: z -> eta + r^2 (z-eta)/|z-eta|^2. Involutive away from the center.
inline Point invert_point(const Circle& c, Point p) {
    Point d = p - c.center;
    double d2 = norm2(d);
    if (!(d2 > 0.0)) throw DomainError("inversion of the center: image at infinity");
    return c.center + (c.radius * c.radius / d2) * d;
}

/// Image of a circle or line under inversion. Loci through the inversion
/// center map to lines and vice versa.
inline GeneralizedCircle invert_generalized(const Circle& inv, const GeneralizedCircle& g,
                                            Tolerance tol = {}) {
    const double r2 = inv.radius * inv.radius;
    if (const auto* c = std::get_if<Circle>(&g)) {
        Point d = c->center - inv.center;
        double dn = norm(d);
        if (tol.zero(dn - c->radius, c->radius)) {
            // passes through the inversion center: image is a line
            Point n = normalized(d);
            Point onLine = inv.center + (r2 / (2.0 * dn * dn)) * d;
            return Line{n, dot(n, onLine)};
        }
        double k = r2 / (dn * dn - c->radius * c->radius);
        return Circle{inv.center + k * d, std::abs(k) * c->radius};
    }
    const auto& l = std::get<Line>(g);
    double t = l.offset - dot(l.normal, inv.center);  // signed distance center -> line
    if (tol.zero(t, std::abs(l.offset) + norm(inv.center) + 1.0)) {
        return l;  // line through the center maps to itself as a set
    }
    double h = r2 / (2.0 * t);
    return Circle{inv.center + h * l.normal, std::abs(h)};
}

namespace detail {

inline std::vector<Point> ordered(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    return pts;
}

inline std::vector<Point> intersect_circle_circle(const Circle& c1, const Circle& c2,
                                                  Tolerance tol) {
    Point d = c2.center - c1.center;
    double dn = norm(d);
    double scale = std::max({c1.radius, c2.radius, dn});
    if (tol.zero(dn, scale)) {
        if (tol.close(c1.radius, c2.radius)) throw DomainError("coincident circles");
        return {};  // concentric
    }
    double x = (dn * dn + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * dn);
    double h2 = c1.radius * c1.radius - x * x;
    double h2tol = tol.abs * scale * scale;
    if (h2 < -h2tol) return {};
    Point u = (1.0 / dn) * d;
    Point base = c1.center + x * u;
    if (h2 <= h2tol) return {base};  // tangency collapses to a single point
    double h = std::sqrt(h2);
    return ordered({base + h * perp(u), base - h * perp(u)});
}

inline std::vector<Point> intersect_circle_line(const Circle& c, const Line& l, Tolerance tol) {
    double t = l.offset - dot(l.normal, c.center);
    double h2 = c.radius * c.radius - t * t;
    double h2tol = tol.abs * c.radius * c.radius;
    if (h2 < -h2tol) return {};
    Point foot = c.center + t * l.normal;
    if (h2 <= h2tol) return {foot};
    double h = std::sqrt(h2);
    Point along = perp(l.normal);
    return ordered({foot + h * along, foot - h * along});
}

inline std::vector<Point> intersect_line_line(const Line& l1, const Line& l2, Tolerance tol) {
    double den = cross(l1.normal, l2.normal);
    if (tol.zero(den)) {
        double s = dot(l1.normal, l2.normal) > 0 ? 1.0 : -1.0;
        if (tol.close(l1.offset, s * l2.offset)) throw DomainError("coincident lines");
        return {};
    }
    return {{(l1.offset * l2.normal.y - l2.offset * l1.normal.y) / den,
             (l1.normal.x * l2.offset - l2.normal.x * l1.offset) / den}};
}

}  // namespace detail

/// Zero, one, or two intersection points, ordered by ascending y then x.
/// A discriminant within tolerance of zero collapses to a single tangency point.
inline std::vector<Point> circle_circle_intersection(const GeneralizedCircle& g1,
                                                     const GeneralizedCircle& g2,
                                                     Tolerance tol = {}) {
    const auto* c1 = std::get_if<Circle>(&g1);
    const auto* c2 = std::get_if<Circle>(&g2);
    if (c1 && c2) return detail::intersect_circle_circle(*c1, *c2, tol);
    if (c1) return detail::intersect_circle_line(*c1, std::get<Line>(g2), tol);
    if (c2) return detail::intersect_circle_line(*c2, std::get<Line>(g1), tol);
    return detail::intersect_line_line(std::get<Line>(g1), std::get<Line>(g2), tol);
}

/// Locus of |P-f1| / |P-f2| = k; the bisector line when k = 1.
inline GeneralizedCircle apollonius_circle(Point f1, Point f2, double k, Tolerance tol = {}) {
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("Apollonius ratio must be positive", "k");
    double sep = dist(f1, f2);
    if (tol.zero(sep, norm(f1) + norm(f2))) throw DomainError("Apollonius foci coincide");
    if (std::abs(k - 1.0) <= tol.abs) {
        Point n = normalized(f2 - f1);
        return Line{n, dot(n, 0.5 * (f1 + f2))};
    }
    double k2 = k * k;
    Point center = (1.0 / (1.0 - k2)) * (f1 - k2 * f2);
    double radius = k * sep / std::abs(1.0 - k2);
    return Circle{center, radius};
}

/// Circle through three points; the line through them when exactly collinear.
inline GeneralizedCircle circle_through(Point a, Point b, Point c) {
    Point u = b - a;
    Point v = c - a;
    double den = 2.0 * cross(u, v);
    double s2 = std::max(norm2(u), norm2(v));
    if (std::abs(den) <= 1e-14 * s2) {
        Point dir = norm2(u) >= norm2(v) ? u : v;
        Point n = normalized(perp(dir));
        return Line{n, dot(n, a)};
    }
    double nu = norm2(u);
    double nv = norm2(v);
    Point rel{(v.y * nu - u.y * nv) / den, (u.x * nv - v.x * nu) / den};
    Point center = a + rel;
    return Circle{center, dist(center, a)};
}

/// Hyperbolic: the Apollonius circle of the pencil through the point.
/// Elliptic: the circle (or line) through both base points and the point.
inline GeneralizedCircle pencil_member(const Pencil& p, Point through, Tolerance tol = {}) {
    double scale = dist(p.omega, p.omegaBar);
    if (tol.zero(scale, norm(p.omega) + norm(p.omegaBar)))
        throw DomainError("pencil base points coincide");
    double d1 = dist(through, p.omega);
    double d2 = dist(through, p.omegaBar);
    if (tol.zero(d1, scale) || tol.zero(d2, scale))
        throw DomainError("pencil member through a focus/base point is degenerate", "through");
    if (p.kind == PencilKind::Hyperbolic) return apollonius_circle(p.omega, p.omegaBar, d1 / d2, tol);
    return circle_through(p.omega, p.omegaBar, through);
}

/// True iff d lies on the circumcircle of (a, b, c) within tolerance.
inline bool concyclic(Point a, Point b, Point c, Point d, Tolerance tol = {}) {
    GeneralizedCircle g = circle_through(a, b, c);
    const auto* circ = std::get_if<Circle>(&g);
    if (!circ) throw DomainError("concyclic test requires non-collinear base points");
    return tol.close(dist(d, circ->center), circ->radius);
}

}  // namespace trimoduli::geom2
