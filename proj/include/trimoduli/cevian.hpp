#pragma once

// Equidivision, Routh, and generalized cevian-intersection operations on
// triangles, the rotation angle they induce on the moduli disc, and the
// inverse problems recovering the division ratio from a target angle.

#include "core.hpp"
#include "shape.hpp"

namespace trimoduli::cevian {

using shape::Triangle;

struct CevianParams {
    double p;
    double q;
};

namespace detail {

/// Intersection of lines P1 P2 and Q1 Q2 with a scale-relative parallel test.
inline Point line_intersect(Point p1, Point p2, Point q1, Point q2) {
    Point d1 = p2 - p1;
    Point d2 = q2 - q1;
    double den = cross(d1, d2);
    double diam2 = std::max({norm2(d1), norm2(d2), norm2(q1 - p1)});
    if (std::abs(den) <= 1e-12 * diam2)
        throw DomainError("cevian lines are parallel: no intersection");
    double t = cross(q1 - p1, d2) / den;
    return p1 + t * d1;
}

}  // namespace detail

/// q-equidivision: A'' = qB + (1-q)C and cyclically. Rotates the class by
/// 2 arctan(sqrt(3) (2q-1)); never degenerates for valid input.
inline Triangle t_q(const Triangle& t, double q) {
    Point app = q * t.B + (1.0 - q) * t.C;
    Point bpp = q * t.C + (1.0 - q) * t.A;
    Point cpp = q * t.A + (1.0 - q) * t.B;
    try {
        return Triangle(app, bpp, cpp);
    } catch (const DomainError& e) {
        throw InternalError(std::string("equidivision output failed validity: ") + e.what());
    }
}

/// Generalized cevian operation: the three intersection points of AA'' with
/// BB''_p, BB'' with CC''_p, and CC'' with AA''_p, where the double-primed
/// points divide the sides in ratio q and the p-subscripted ones in ratio p.
inline Triangle t_pq(const Triangle& t, CevianParams params) {
    if (params.p == 0.5 && params.q == 0.5)
        throw DomainError("p = q = 1/2 is degenerate: all six cevians meet at the centroid");
    double p = params.p, q = params.q;
    Point app = q * t.B + (1.0 - q) * t.C;
    Point bpp = q * t.C + (1.0 - q) * t.A;
    Point cpp = q * t.A + (1.0 - q) * t.B;
    Point appP = (1.0 - p) * t.B + p * t.C;
    Point bppP = (1.0 - p) * t.C + p * t.A;
    Point cppP = (1.0 - p) * t.A + p * t.B;
    Point aq = detail::line_intersect(t.A, app, t.B, bppP);
    Point bq = detail::line_intersect(t.B, bpp, t.C, cppP);
    Point cq = detail::line_intersect(t.C, cpp, t.A, appP);
    return Triangle(aq, bq, cq);  // clockwise or degenerate output is refused, not relabeled
}

/// q-Routh operation, the p = 1-q specialization of t_pq.
inline Triangle routh(const Triangle& t, double q) {
    if (q == 0.5) throw DomainError("q = 1/2: the three cevians are concurrent at the centroid", "q");
    return t_pq(t, {1.0 - q, q});
}

/// Rotation angle 2 arg{(p-1)(2q-1) rho - (q-1)(2p-1)} in canonical (-pi, pi] form.
inline double theta_pq(double p, double q) {
    Cplx expr = (p - 1.0) * (2.0 * q - 1.0) * shape::rho - (q - 1.0) * (2.0 * p - 1.0);
    if (!(std::abs(expr) > 0.0))
        throw DomainError("rotation angle undefined: cevian parameters are degenerate");
    return wrap_angle(2.0 * std::arg(expr));
}

/// Division ratio q with t_q rotating the class by theta. Realizable range is
/// the image of q in (0, 1): canonical theta in (-2pi/3, 2pi/3), open.
inline double q_for_theta(double theta) {
    double th = wrap_angle(theta);
    if (!(th > -2.0 * pi / 3.0 && th < 2.0 * pi / 3.0))
        throw DomainError("rotation not realizable by a single equidivision operation", "theta");
    return (std::tan(th / 2.0) / shape::sqrt3 + 1.0) / 2.0;
}

/// Routh ratio q' solving sqrt(3) q' / (2 - q') = tan(theta/2).
inline double routh_q_for_theta(double theta) {
    double th = wrap_angle(theta);
    if (th == pi) throw DomainError("rotation by pi not realizable by a Routh operation", "theta");
    double u = std::tan(th / 2.0);
    double den = shape::sqrt3 + u;
    if (std::abs(den) <= 1e-12)
        throw DomainError("rotation not realizable by a Routh operation", "theta");
    double qPrime = 2.0 * u / den;
    if (std::abs(qPrime - 0.5) <= 1e-12)
        throw DomainError("target rotation needs q' = 1/2, where the Routh operation is undefined",
                          "theta");
    return qPrime;
}

}  // namespace trimoduli::cevian
