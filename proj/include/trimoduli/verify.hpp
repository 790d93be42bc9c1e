#pragma once

// Seeded verification suites behind the `verify` command. Each case draws its
// own stream from (master seed, case index), so reports are reproducible and
// independent of evaluation order.

#include <cstdint>
#include <string>
#include <vector>

#include "cevian.hpp"
#include "classops.hpp"
#include "core.hpp"
#include "desitter.hpp"
#include "geom2.hpp"
#include "pompeiu.hpp"
#include "rng.hpp"
#include "shape.hpp"
#include "space3.hpp"

namespace trimoduli::verify {

struct SuiteResult {
    std::string name;
    int pass = 0;
    int fail = 0;
    double worstResidual = 0.0;
};

namespace sample {

/// Side triple in [0.1, 10] with a small non-degeneracy margin.
inline shape::SideLengths side_triple(rng::Rng& r) {
    for (;;) {
        double a = r.uniform(0.1, 10.0);
        double b = r.uniform(0.1, 10.0);
        double c = r.uniform(0.1, 10.0);
        double margin = std::min({b + c - a, c + a - b, a + b - c});
        if (margin > 1e-4 * (a + b + c)) return {a, b, c};
    }
}

/// Anticlockwise triangle with vertices in [-3,3]^2, excluding thin slivers.
inline shape::Triangle triangle(rng::Rng& r) {
    for (;;) {
        Point a{r.uniform(-3.0, 3.0), r.uniform(-3.0, 3.0)};
        Point b{r.uniform(-3.0, 3.0), r.uniform(-3.0, 3.0)};
        Point c{r.uniform(-3.0, 3.0), r.uniform(-3.0, 3.0)};
        double l2 = std::max({norm2(b - c), norm2(c - a), norm2(a - b)});
        if (std::abs(cross(b - a, c - a)) > 0.05 * l2) return shape::orient(a, b, c);
    }
}

inline Point disc_point(rng::Rng& r, double radius = 0.95) {
    for (;;) {
        Point p{r.uniform(-radius, radius), r.uniform(-radius, radius)};
        if (norm2(p) < radius * radius) return p;
    }
}

inline geom2::Circle circle(rng::Rng& r) {
    return {{r.uniform(-2.0, 2.0), r.uniform(-2.0, 2.0)}, r.uniform(0.2, 2.0)};
}

inline geom2::Line line(rng::Rng& r) {
    double t = r.uniform(0.0, 2.0 * pi);
    return {{std::cos(t), std::sin(t)}, r.uniform(-2.0, 2.0)};
}

/// Pair of pencil foci with comfortable separation.
inline std::pair<Point, Point> foci(rng::Rng& r) {
    for (;;) {
        Point f1{r.uniform(-2.0, 2.0), r.uniform(-2.0, 2.0)};
        Point f2{r.uniform(-2.0, 2.0), r.uniform(-2.0, 2.0)};
        if (dist(f1, f2) > 0.5) return {f1, f2};
    }
}

/// Point well away from the line through the foci and from the foci themselves.
inline Point elliptic_witness(rng::Rng& r, Point f1, Point f2) {
    for (;;) {
        Point p{r.uniform(-2.5, 2.5), r.uniform(-2.5, 2.5)};
        double sep = dist(f1, f2);
        if (std::abs(cross(f2 - f1, p - f1)) > 0.05 * sep * sep && dist(p, f1) > 0.1 &&
            dist(p, f2) > 0.1)
            return p;
    }
}

}  // namespace sample

namespace detail {

struct CaseTally {
    bool ok = true;
    double worst = 0.0;

    void expect(double residual, double tolerance) {
        worst = std::max(worst, residual);
        if (!(residual <= tolerance)) ok = false;
    }
    void expect_true(bool condition) {
        if (!condition) ok = false;
    }
};

inline void fold(SuiteResult& out, const CaseTally& t) {
    (t.ok ? out.pass : out.fail)++;
    out.worstResidual = std::max(out.worstResidual, t.worst);
}

inline double angle_gap(double a, double b) { return std::abs(wrap_angle(a - b)); }

}  // namespace detail

/// Constructive solver vs closed form: solve(s).p equals the Pompeiu coordinate
/// of phi_of_sides(s); exterior point is the unit-circle inversion of the interior.
inline SuiteResult run_thm35(int n, std::uint64_t seed) {
    SuiteResult out{"thm35"};
    for (int i = 0; i < n; ++i) {
        rng::Rng r(rng::derive(seed, i));
        detail::CaseTally t;
        shape::SideLengths s = sample::side_triple(r);
        pompeiu::PompeiuSolution sol = pompeiu::solve(s);
        Point closed = shape::pompeiu_coordinate(shape::phi_of_sides(s));
        t.expect(dist(sol.p, closed), 1e-8);
        if (sol.pPrime) {
            t.expect(dist(*sol.pPrime, pompeiu::exterior_from_interior(sol.p)), 1e-8);
        }
        detail::fold(out, t);
    }
    return out;
}

/// Cevian operations rotate the moduli disc by the closed-form angle and
/// preserve the modulus; the p = 0 and p = 1-q specializations match the
/// equidivision and Routh operations vertexwise.
inline SuiteResult run_thm51(int n, std::uint64_t seed) {
    SuiteResult out{"thm51"};
    for (int i = 0; i < n; ++i) {
        rng::Rng r(rng::derive(seed, i));
        detail::CaseTally t;
        shape::Triangle tri = sample::triangle(r);
        double p, q;
        for (;;) {
            p = r.uniform(0.0, 1.0);
            q = r.uniform(0.0, 1.0);
            Cplx expr = (p - 1.0) * (2.0 * q - 1.0) * shape::rho - (q - 1.0) * (2.0 * p - 1.0);
            if (std::abs(expr) > 1e-3) break;
        }
        Cplx before = cx(shape::phi(tri).w);
        Cplx after = cx(shape::phi(cevian::t_pq(tri, {p, q})).w);
        t.expect(detail::angle_gap(std::arg(after / before), cevian::theta_pq(p, q)), 1e-8);
        t.expect(std::abs(std::abs(after) - std::abs(before)), 1e-9);

        shape::Triangle viaTq = cevian::t_q(tri, q);
        shape::Triangle viaP0 = cevian::t_pq(tri, {0.0, q});
        t.expect(std::max({dist(viaTq.A, viaP0.A), dist(viaTq.B, viaP0.B), dist(viaTq.C, viaP0.C)}),
                 1e-10);
        shape::Triangle viaRouth = cevian::routh(tri, q);
        shape::Triangle viaP1q = cevian::t_pq(tri, {1.0 - q, q});
        t.expect(std::max({dist(viaRouth.A, viaP1q.A), dist(viaRouth.B, viaP1q.B),
                           dist(viaRouth.C, viaP1q.C)}),
                 1e-10);
        detail::fold(out, t);
    }
    return out;
}

/// Inversion involution and distance identity, pencil orthogonality, the
/// concentric-circles image of a pencil under inversion at a focus, and the
/// Apollonius ratio over sampled locus points.
inline SuiteResult run_pencils(int n, std::uint64_t seed) {
    SuiteResult out{"pencils"};
    for (int i = 0; i < n; ++i) {
        rng::Rng r(rng::derive(seed, i));
        detail::CaseTally t;

        geom2::Circle inv = sample::circle(r);
        Point p{r.uniform(-3.0, 3.0), r.uniform(-3.0, 3.0)};
        if (dist(p, inv.center) > 1e-3) {
            Point back = geom2::invert_point(inv, geom2::invert_point(inv, p));
            t.expect(dist(back, p) / std::max(1.0, norm(p)), 1e-9);
        }
        Point q1 = sample::disc_point(r, 2.0);
        Point q2 = sample::disc_point(r, 2.0);
        if (norm(q1) > 1e-3 && norm(q2) > 1e-3 && dist(q1, q2) > 1e-3) {
            geom2::Circle unit{{0.0, 0.0}, 1.0};
            double lhs = dist(geom2::invert_point(unit, q1), geom2::invert_point(unit, q2));
            double rhs = dist(q1, q2) / (norm(q1) * norm(q2));
            t.expect(std::abs(lhs - rhs) / rhs, 1e-9);
        }

        auto [f1, f2] = sample::foci(r);
        geom2::Pencil ell{geom2::PencilKind::Elliptic, f1, f2};
        double k = std::exp(r.sign() * r.uniform(0.1, 1.2));
        geom2::GeneralizedCircle h = geom2::apollonius_circle(f1, f2, k);
        geom2::GeneralizedCircle e = geom2::pencil_member(ell, sample::elliptic_witness(r, f1, f2));
        auto xs = geom2::circle_circle_intersection(h, e);
        t.expect_true(!xs.empty());
        if (!xs.empty()) {
            Point tangentH = geom2::tangent_at(h, xs[0]);
            Point tangentE = geom2::tangent_at(e, xs[0]);
            t.expect(std::abs(dot(tangentH, tangentE)), 1e-8);
        }

        // Inversion centered at omegaBar sends the hyperbolic pencil to circles
        // concentric around the image of omega, and the elliptic pencil to lines
        // through it.
        geom2::Circle atFocus{f2, 1.0};
        Point omegaImage = geom2::invert_point(atFocus, f1);
        geom2::GeneralizedCircle hImg = geom2::invert_generalized(atFocus, h);
        if (const auto* hc = std::get_if<geom2::Circle>(&hImg)) {
            t.expect(dist(hc->center, omegaImage) / hc->radius, 1e-9);
        } else {
            t.expect_true(false);
        }
        geom2::GeneralizedCircle eImg = geom2::invert_generalized(atFocus, e);
        if (const auto* el = std::get_if<geom2::Line>(&eImg)) {
            t.expect(std::abs(dot(el->normal, omegaImage) - el->offset), 1e-9);
        } else {
            t.expect_true(false);
        }

        if (const auto* hc = std::get_if<geom2::Circle>(&h)) {
            for (int j = 0; j < 20; ++j) {
                double ang = 2.0 * pi * j / 20.0;
                Point x = hc->center + hc->radius * Point{std::cos(ang), std::sin(ang)};
                t.expect(std::abs(dist(x, f1) / dist(x, f2) - k) / k, 1e-9);
            }
        }
        detail::fold(out, t);
    }
    return out;
}

/// Unit norm of lifts, the cosh(lambda) law against focus-inversion radii, the
/// cos(theta) law against Euclidean tangents, hyperbolic x elliptic duality,
/// geodesic additivity, and incidence agreement.
inline SuiteResult run_desitter(int n, std::uint64_t seed) {
    SuiteResult out{"desitter"};
    for (int i = 0; i < n; ++i) {
        rng::Rng r(rng::derive(seed, i));
        detail::CaseTally t;

        desitter::OrientedCircle oc{sample::circle(r), r.sign()};
        desitter::OrientedCircle ol{sample::line(r), r.sign()};
        desitter::MinkowskiVector gc = desitter::lift_circle(oc).gamma;
        desitter::MinkowskiVector gl = desitter::lift_circle(ol).gamma;
        t.expect(std::abs(desitter::minkowski_inner(gc, gc) - 1.0), 1e-12);
        t.expect(std::abs(desitter::minkowski_inner(gl, gl) - 1.0), 1e-12);

        auto [f1, f2] = sample::foci(r);
        double k1 = std::exp(r.uniform(0.05, 1.5));
        double k2 = std::exp(r.uniform(0.05, 1.5));
        double k3 = std::exp(r.uniform(0.05, 1.5));
        if (std::abs(std::log(k1 / k2)) > 1e-3) {
            desitter::OrientedCircle m1{geom2::apollonius_circle(f1, f2, k1), 1};
            desitter::OrientedCircle m2{geom2::apollonius_circle(f1, f2, k2), 1};
            double lambda = desitter::poncelet_separation(m1, m2);
            geom2::Circle atFocus{f1, 1.0};
            const auto i1 = std::get<geom2::Circle>(geom2::invert_generalized(atFocus, m1.geo));
            const auto i2 = std::get<geom2::Circle>(geom2::invert_generalized(atFocus, m2.geo));
            t.expect(std::abs(lambda - std::abs(std::log(i2.radius / i1.radius))), 1e-8);

            // arc lengths along the common geodesic are additive: the extreme
            // pair's separation is the sum of the two adjacent ones
            desitter::OrientedCircle m3{geom2::apollonius_circle(f1, f2, k3), 1};
            double l12 = lambda;
            double l23 = desitter::poncelet_separation(m2, m3);
            double l13 = desitter::poncelet_separation(m1, m3);
            double longest = std::max({l12, l23, l13});
            t.expect(std::abs(longest - (l12 + l23 + l13 - longest)), 1e-8);
        }

        // intersecting pair: circle through two random points of another circle
        geom2::Circle base = sample::circle(r);
        double a1 = r.uniform(0.0, 2.0 * pi);
        double a2 = a1 + r.uniform(0.5, pi);
        Point x1 = base.center + base.radius * Point{std::cos(a1), std::sin(a1)};
        Point x2 = base.center + base.radius * Point{std::cos(a2), std::sin(a2)};
        Point third{r.uniform(-3.0, 3.0), r.uniform(-3.0, 3.0)};
        geom2::GeneralizedCircle other = geom2::circle_through(x1, x2, third);
        if (std::get_if<geom2::Circle>(&other) && dist(x1, third) > 0.2 && dist(x2, third) > 0.2) {
            desitter::OrientedCircle o1{base, r.sign()};
            desitter::OrientedCircle o2{other, r.sign()};
            double theta = desitter::intersection_angle(o1, o2);
            Point t1 = desitter::oriented_tangent(o1, x1);
            Point t2 = desitter::oriented_tangent(o2, x1);
            t.expect(std::abs(std::cos(theta) - dot(t1, t2)), 1e-8);
        }

        geom2::Pencil ell{geom2::PencilKind::Elliptic, f1, f2};
        desitter::OrientedCircle hm{geom2::apollonius_circle(f1, f2, k1), r.sign()};
        desitter::OrientedCircle em{geom2::pencil_member(ell, sample::elliptic_witness(r, f1, f2)),
                                    r.sign()};
        t.expect(std::abs(desitter::minkowski_inner(desitter::lift_circle(hm).gamma,
                                                    desitter::lift_circle(em).gamma)),
                 1e-9);

        geom2::Circle c = sample::circle(r);
        double ang = r.uniform(0.0, 2.0 * pi);
        Point on = c.center + c.radius * Point{std::cos(ang), std::sin(ang)};
        Point off = c.center + (c.radius * (1.0 + 0.1 * r.uniform(0.1, 1.0))) *
                                   Point{std::cos(ang), std::sin(ang)};
        t.expect_true(desitter::point_on_circle_test(on, {c, 1}));
        t.expect_true(!desitter::point_on_circle_test(off, {c, 1}));
        detail::fold(out, t);
    }
    return out;
}

/// Similarity circles in 3D: distance-ratio law over samples, constant
/// Apollonius ratio to the foci, and invariance under sphere inversion and
/// reflection in the base plane.
inline SuiteResult run_space3(int n, std::uint64_t seed) {
    SuiteResult out{"space3"};
    const space3::Sphere unit{{0.0, 0.0, 0.0}, 1.0};
    for (int i = 0; i < n; ++i) {
        rng::Rng r(rng::derive(seed, i));
        detail::CaseTally t;
        shape::SideLengths s = sample::side_triple(r);
        if (s.equilateral()) {
            detail::fold(out, t);
            continue;
        }
        space3::Circle3 circ = space3::similarity_circle(s);
        auto [w, wPrime] = space3::foci(circ);
        space3::Point3 a0{shape::A0.x, shape::A0.y, 0.0};
        space3::Point3 b0{shape::B0.x, shape::B0.y, 0.0};
        space3::Point3 c0{shape::C0.x, shape::C0.y, 0.0};
        double fociRatio = -1.0;
        for (int j = 0; j < 64; ++j) {
            space3::Point3 x = space3::sample_circle(circ, 2.0 * pi * j / 64.0);
            double r1 = space3::dist(x, a0) / s.a;
            double r2 = space3::dist(x, b0) / s.b;
            double r3 = space3::dist(x, c0) / s.c;
            double mean = (r1 + r2 + r3) / 3.0;
            t.expect(std::max({std::abs(r1 - mean), std::abs(r2 - mean), std::abs(r3 - mean)}) / mean,
                     1e-8);
            double ratio = space3::dist(x, w) / space3::dist(x, wPrime);
            if (fociRatio < 0.0)
                fociRatio = ratio;
            else
                t.expect(std::abs(ratio - fociRatio) / fociRatio, 1e-9);

            space3::Point3 inverted = space3::sphere_invert(unit, x);
            t.expect(std::abs(space3::dist(inverted, circ.center) - circ.radius), 1e-9);
            space3::Point3 reflected{x.x, x.y, -x.z};
            t.expect(std::abs(space3::dist(reflected, circ.center) - circ.radius), 1e-9);
        }
        detail::fold(out, t);
    }
    return out;
}

inline std::vector<SuiteResult> run(const std::string& suite, int n, std::uint64_t seed) {
    if (n <= 0) throw DomainError("case count must be positive", "n");
    std::vector<SuiteResult> results;
    bool all = suite == "all";
    if (all || suite == "thm35") results.push_back(run_thm35(n, seed));
    if (all || suite == "thm51") results.push_back(run_thm51(n, seed));
    if (all || suite == "pencils") results.push_back(run_pencils(n, seed));
    if (all || suite == "desitter") results.push_back(run_desitter(n, seed));
    if (all || suite == "space3") results.push_back(run_space3(n, seed));
    if (results.empty()) throw DomainError("unknown verification suite: " + suite, "suite");
    return results;
}

}  // namespace trimoduli::verify
