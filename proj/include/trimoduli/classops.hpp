#pragma once

// Rotation and homothety actions on similarity classes in the Pompeiu disc,
// their polar decomposition, and the vertex-motion realization that keeps an
// edge fixed while moving the apex.

#include "core.hpp"
#include "geom2.hpp"
#include "shape.hpp"

namespace trimoduli::classops {

using shape::ShapeClass;
using shape::Triangle;

/// Apexes of the two equilateral triangles erected on the edge BC.
struct OmegaPair {
    Point omega;     // B + rho (C - B)
    Point omegaBar;  // B + conj(rho) (C - B)
};

/// theta in [0, 2pi); lambda finite unless the target class is equilateral,
/// which is flagged instead of carried as a float infinity.
struct PolarDecomposition {
    double theta = 0.0;
    double lambda = 0.0;
    bool lambdaMinusInfinity = false;
};

/// Rotation by theta of the Pompeiu coordinate: z -> e^{i theta} z.
inline ShapeClass rotate_class(const ShapeClass& c, double theta) {
    Cplx z = cx(shape::pompeiu_coordinate(c));
    return shape::class_from_pompeiu(pt(std::polar(1.0, theta) * z));
}

/// Homothety by e^lambda of the Pompeiu coordinate: z -> e^lambda z.
inline ShapeClass scale_class(const ShapeClass& c, double lambda) {
    Point z = shape::pompeiu_coordinate(c);
    double factor = std::exp(lambda);
    if (!(factor * norm(z) < 1.0))
        throw DomainError("homothety leaves the moduli disc (degenerate limit)", "lambda");
    return shape::class_from_pompeiu(factor * z);
}

/// Unique (theta, lambda) with H_lambda(R_theta(base)) = target, theta in [0, 2pi).
inline PolarDecomposition decompose(const ShapeClass& target, const ShapeClass& base) {
    Point zb = shape::pompeiu_coordinate(base);
    if (!(norm2(zb) > 0.0))
        throw DomainError("decomposition base must be non-equilateral", "base");
    Point zt = shape::pompeiu_coordinate(target);
    PolarDecomposition d;
    if (!(norm2(zt) > 0.0)) {
        d.lambdaMinusInfinity = true;
        return d;
    }
    d.theta = wrap_angle_positive(std::arg(cx(zt)) - std::arg(cx(zb)));
    d.lambda = std::log(norm(zt) / norm(zb));
    return d;
}

inline OmegaPair omega_pair(const Triangle& t) {
    Cplx edge = cx(t.C) - cx(t.B);
    return {pt(cx(t.B) + shape::rho * edge), pt(cx(t.B) + shape::rho_bar * edge)};
}

/// Anti-holomorphic Moebius map sigma of the class whose Pompeiu coordinate is z:
/// z -> (conj(rho) i conj(z) - rho) / (i conj(z) - 1). Maps 0 to rho.
inline Point sigma_from_pompeiu(Point z) {
    if (!(norm2(z) < 1.0)) throw DomainError("Pompeiu coordinate outside the open disc", "z");
    Cplx w = Cplx{0.0, 1.0} * std::conj(cx(z));
    return pt((shape::rho_bar * w - shape::rho) / (w - 1.0));
}

/// Moves the apex A (keeping B and C) so that the class of the result is
/// H_lambda(R_theta([t])). The apex is recovered from the transformed class by
/// fixing a = |B-C|, rescaling the other two sides, and intersecting the two
/// apex circles; exactly one intersection preserves the anticlockwise labeling.
inline Triangle move_vertex(const Triangle& t, double theta, double lambda, Tolerance tol = {}) {
    ShapeClass moved = scale_class(rotate_class(shape::phi(t), theta), lambda);
    Cplx s = cx(sigma_from_pompeiu(shape::pompeiu_coordinate(moved)));

    // On the normalized triangle (B=0, C=1) the apex is sigma itself, so the
    // side ratios b:a and c:a are |1-sigma| and |sigma|.
    double aLen = dist(t.B, t.C);
    double bLen = std::abs(1.0 - s) * aLen;
    double cLen = std::abs(s) * aLen;

    auto pts = geom2::circle_circle_intersection(geom2::Circle{t.B, cLen},
                                                 geom2::Circle{t.C, bLen}, tol);
    Point edge = t.C - t.B;
    const Point* apex = nullptr;
    for (const Point& cand : pts) {
        if (cross(edge, cand - t.B) > 0.0) {
            if (apex) throw InternalError("both apex candidates are anticlockwise-admissible");
            apex = &cand;
        }
    }
    if (!apex) throw InternalError("no anticlockwise-admissible apex for the moved class");
    return Triangle(*apex, t.B, t.C);
}

}  // namespace trimoduli::classops
