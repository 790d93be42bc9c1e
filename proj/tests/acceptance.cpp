// Acceptance suite: one line per criterion, PASS/FAIL with the worst observed
// residual. Exits with the number of failed criteria. Criterion 9 drives the
// CLI binary, whose path is argv[1] (omitted = skip with FAIL).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "trimoduli/trimoduli.hpp"

using namespace trimoduli;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s [%d] %s (%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(), detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double ratio_drift(Point p, const shape::SideLengths& s) {
    double r1 = dist(p, shape::A0) / s.a;
    double r2 = dist(p, shape::B0) / s.b;
    double r3 = dist(p, shape::C0) / s.c;
    double mean = (r1 + r2 + r3) / 3.0;
    return std::max({std::abs(r1 - mean), std::abs(r2 - mean), std::abs(r3 - mean)}) / mean;
}

// 1. Oracle equivalence of the constructive solver and the closed form over
//    10^4 seeded side triples, under 5 seconds.
// 2. Exterior point is the unit-circle inversion of the interior one, and both
//    carry the a:b:c distance ratios.
void criteria_1_2() {
    const int n = 10000;
    double worstGap = 0.0, worstInv = 0.0, worstRatio = 0.0;
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < n; ++i) {
        rng::Rng r(rng::derive(42, i));
        shape::SideLengths s = verify::sample::side_triple(r);
        pompeiu::PompeiuSolution sol = pompeiu::solve(s);
        Point closed = shape::pompeiu_coordinate(shape::phi_of_sides(s));
        worstGap = std::max(worstGap, dist(sol.p, closed));
        worstRatio = std::max(worstRatio, ratio_drift(sol.p, s));
        if (sol.pPrime) {
            worstInv = std::max(worstInv, dist(*sol.pPrime, pompeiu::exterior_from_interior(sol.p)));
            worstRatio = std::max(worstRatio, ratio_drift(*sol.pPrime, s));
        }
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(1, "constructive solve matches i*conj(phi_of_sides) over 10^4 triples",
           worstGap < 1e-8 && seconds < 5.0,
           "worst " + fmt(worstGap) + " < 1e-8, " + fmt(seconds) + " s");
    report(2, "P' = P/|P|^2 and both points carry ratios a:b:c",
           worstInv < 1e-8 && worstRatio < 1e-8,
           "inversion gap " + fmt(worstInv) + ", ratio drift " + fmt(worstRatio) + " < 1e-8");
}

// 3. Distances to the frame: strict triangle inequalities off the unit circle,
//    degenerate equality on it.
void criterion_3() {
    bool strictOk = true;
    double worstOn = 0.0;
    int done = 0;
    for (std::uint64_t i = 0; done < 10000; ++i) {
        rng::Rng r(rng::derive(43, i));
        double radius = 3.0 * (1.0 - r.uniform());  // (0, 3]
        if (std::abs(radius - 1.0) < 1e-9) continue;
        double ang = r.uniform(0.0, 2 * pi);
        Point p{radius * std::cos(ang), radius * std::sin(ang)};
        double a = dist(p, shape::A0), b = dist(p, shape::B0), c = dist(p, shape::C0);
        if (!(std::min({b + c - a, c + a - b, a + b - c}) > 0.0)) strictOk = false;
        ++done;
    }
    for (int i = 0; i < 1000; ++i) {
        rng::Rng r(rng::derive(44, i));
        double ang = r.uniform(0.0, 2 * pi);
        Point p{std::cos(ang), std::sin(ang)};
        double a = dist(p, shape::A0), b = dist(p, shape::B0), c = dist(p, shape::C0);
        worstOn = std::max(worstOn, std::abs(2 * std::max({a, b, c}) - (a + b + c)));
    }
    report(3, "Pompeiu/van Schooten dichotomy of the frame distances",
           strictOk && worstOn < 1e-9,
           std::string("strict off-circle: ") + (strictOk ? "yes" : "NO") + ", on-circle gap " +
               fmt(worstOn) + " < 1e-9");
}

// 4. Cevian operations rotate the disc by the closed-form angle; the
//    specializations and spot values hold.
void criterion_4() {
    double worstAngle = 0.0, worstMod = 0.0, worstSpecial = 0.0;
    for (int i = 0; i < 1000; ++i) {
        rng::Rng r(rng::derive(45, i));
        shape::Triangle t = verify::sample::triangle(r);
        double p, q;
        for (;;) {
            p = r.uniform(0.0, 1.0);
            q = r.uniform(0.0, 1.0);
            Cplx expr = (p - 1) * (2 * q - 1) * shape::rho - (q - 1) * (2 * p - 1);
            if (std::abs(expr) > 1e-3) break;
        }
        Cplx before = cx(shape::phi(t).w);
        Cplx after = cx(shape::phi(cevian::t_pq(t, {p, q})).w);
        worstAngle = std::max(
            worstAngle, std::abs(wrap_angle(std::arg(after / before) - cevian::theta_pq(p, q))));
        worstMod = std::max(worstMod, std::abs(std::abs(after) - std::abs(before)));

        shape::Triangle viaTq = cevian::t_q(t, q);
        shape::Triangle viaP0 = cevian::t_pq(t, {0.0, q});
        worstSpecial = std::max(worstSpecial, std::max({dist(viaTq.A, viaP0.A),
                                                        dist(viaTq.B, viaP0.B),
                                                        dist(viaTq.C, viaP0.C)}));
        if (std::abs(q - 0.5) > 1e-6) {
            shape::Triangle viaRouth = cevian::routh(t, q);
            shape::Triangle viaP1q = cevian::t_pq(t, {1.0 - q, q});
            worstSpecial = std::max(worstSpecial, std::max({dist(viaRouth.A, viaP1q.A),
                                                            dist(viaRouth.B, viaP1q.B),
                                                            dist(viaRouth.C, viaP1q.C)}));
        }
    }
    double spot1 = std::abs(cevian::theta_pq(0.0, 1.0) - 2 * pi / 3);
    double spot2 = std::abs(cevian::routh_q_for_theta(pi / 2) - 2.0 / (1.0 + std::sqrt(3.0)));
    report(4, "cevian operations realize the closed-form disc rotation",
           worstAngle < 1e-8 && worstMod < 1e-9 && worstSpecial < 1e-10 && spot1 < 1e-12 &&
               spot2 < 1e-12,
           "angle " + fmt(worstAngle) + " < 1e-8, modulus " + fmt(worstMod) +
               " < 1e-9, specializations " + fmt(worstSpecial) + " < 1e-10, spots " +
               fmt(std::max(spot1, spot2)) + " < 1e-12");
}

// 5. Vertex motion: rotations ride the Apollonius circle of the omega pair,
//    homotheties stay concyclic with it, and the hand case lands on (0.8, 0.6).
void criterion_5() {
    double worstRatio = 0.0, worstConcyclic = 0.0;
    for (int i = 0; i < 1000; ++i) {
        rng::Rng r(rng::derive(46, i));
        shape::Triangle t = verify::sample::triangle(r);
        auto op = classops::omega_pair(t);

        double theta = r.uniform(-pi, pi);
        shape::Triangle spun = classops::move_vertex(t, theta, 0.0);
        double before = dist(t.A, op.omega) / dist(t.A, op.omegaBar);
        double after = dist(spun.A, op.omega) / dist(spun.A, op.omegaBar);
        worstRatio = std::max(worstRatio, std::abs(after - before) / before);

        double zNorm = norm(shape::pompeiu_coordinate(shape::phi(t)));
        double lambda = r.uniform(-1.0, -std::log(zNorm) - 0.05);
        shape::Triangle scaled = classops::move_vertex(t, 0.0, lambda);
        if (dist(scaled.A, t.A) > 1e-9) {
            const auto circ =
                std::get<geom2::Circle>(geom2::circle_through(op.omega, op.omegaBar, t.A));
            worstConcyclic = std::max(
                worstConcyclic,
                std::abs(dist(scaled.A, circ.center) - circ.radius) / circ.radius);
        }
    }
    shape::Triangle hand = classops::move_vertex(shape::Triangle({0, 1}, {0, 0}, {1, 0}), pi, 0.0);
    double handGap = dist(hand.A, Point{0.8, 0.6});
    report(5, "vertex motion rides the omega-pair pencils",
           worstRatio < 1e-9 && worstConcyclic < 1e-8 && handGap < 1e-9,
           "ratio drift " + fmt(worstRatio) + " < 1e-9, concyclicity " + fmt(worstConcyclic) +
               " < 1e-8, hand case " + fmt(handGap) + " < 1e-9");
}

// 6. 3D similarity circles: distance-ratio law, foci constancy, and the double
//    invariance, plus the frozen (1, sqrt 2, 1) geometry.
void criterion_6() {
    double worst = 0.0;
    const space3::Sphere unit{{0, 0, 0}, 1};
    for (int i = 0; i < 100; ++i) {
        rng::Rng r(rng::derive(47, i));
        shape::SideLengths s = verify::sample::side_triple(r);
        if (s.equilateral()) continue;
        space3::Circle3 c = space3::similarity_circle(s);
        auto [w, wPrime] = space3::foci(c);
        space3::Point3 a0{shape::A0.x, shape::A0.y, 0};
        space3::Point3 b0{shape::B0.x, shape::B0.y, 0};
        space3::Point3 c0{shape::C0.x, shape::C0.y, 0};
        double fociRatio = -1;
        for (int j = 0; j < 64; ++j) {
            space3::Point3 x = space3::sample_circle(c, 2 * pi * j / 64);
            double r1 = space3::dist(x, a0) / s.a;
            double r2 = space3::dist(x, b0) / s.b;
            double r3 = space3::dist(x, c0) / s.c;
            double mean = (r1 + r2 + r3) / 3;
            worst = std::max(worst, std::max({std::abs(r1 - mean), std::abs(r2 - mean),
                                              std::abs(r3 - mean)}) /
                                        mean);
            double ratio = space3::dist(x, w) / space3::dist(x, wPrime);
            if (fociRatio < 0)
                fociRatio = ratio;
            else
                worst = std::max(worst, std::abs(ratio - fociRatio) / fociRatio);
            worst = std::max(worst, std::abs(space3::dist(space3::sphere_invert(unit, x), c.center) -
                                             c.radius) /
                                        c.radius);
            space3::Point3 refl{x.x, x.y, -x.z};
            worst = std::max(worst,
                             std::abs(space3::dist(refl, c.center) - c.radius) / c.radius);
        }
    }
    space3::Circle3 hand = space3::similarity_circle({1, std::sqrt(2.0), 1});
    double sqrt3 = std::sqrt(3.0);
    double handGap = std::max({std::abs(hand.center.x - sqrt3), std::abs(hand.center.y - 1.0),
                               std::abs(hand.center.z), std::abs(hand.radius - sqrt3)});
    report(6, "3D similarity circles obey the Apollonius and invariance laws",
           worst < 1e-8 && handGap < 1e-9,
           "worst residual " + fmt(worst) + " < 1e-8, hand case " + fmt(handGap) + " < 1e-9");
}

// 7. de Sitter laws: unit norms, cosh/cos identities, duality, additivity.
void criterion_7() {
    double worstNorm = 0.0, worstCosh = 0.0, worstCos = 0.0, worstDual = 0.0, worstAdd = 0.0;
    for (int i = 0; i < 1000; ++i) {
        rng::Rng r(rng::derive(48, i));
        desitter::OrientedCircle oc{verify::sample::circle(r), r.sign()};
        desitter::OrientedCircle ol{verify::sample::line(r), r.sign()};
        auto gc = desitter::lift_circle(oc).gamma;
        auto gl = desitter::lift_circle(ol).gamma;
        worstNorm = std::max(worstNorm, std::abs(desitter::minkowski_inner(gc, gc) - 1.0));
        worstNorm = std::max(worstNorm, std::abs(desitter::minkowski_inner(gl, gl) - 1.0));

        auto [f1, f2] = verify::sample::foci(r);
        double k1 = std::exp(r.uniform(0.05, 1.5));
        double k2 = std::exp(r.uniform(0.05, 1.5));
        double k3 = std::exp(r.uniform(0.05, 1.5));
        if (std::abs(std::log(k1 / k2)) > 1e-3) {
            desitter::OrientedCircle m1{geom2::apollonius_circle(f1, f2, k1), 1};
            desitter::OrientedCircle m2{geom2::apollonius_circle(f1, f2, k2), 1};
            desitter::OrientedCircle m3{geom2::apollonius_circle(f1, f2, k3), 1};
            double lambda = desitter::poncelet_separation(m1, m2);
            geom2::Circle atFocus{f1, 1.0};
            const auto i1 = std::get<geom2::Circle>(geom2::invert_generalized(atFocus, m1.geo));
            const auto i2 = std::get<geom2::Circle>(geom2::invert_generalized(atFocus, m2.geo));
            worstCosh = std::max(worstCosh,
                                 std::abs(lambda - std::abs(std::log(i2.radius / i1.radius))));
            double l23 = desitter::poncelet_separation(m2, m3);
            double l13 = desitter::poncelet_separation(m1, m3);
            double longest = std::max({lambda, l23, l13});
            worstAdd = std::max(worstAdd, std::abs(longest - (lambda + l23 + l13 - longest)));

            desitter::OrientedCircle em{
                geom2::pencil_member({geom2::PencilKind::Elliptic, f1, f2},
                                     verify::sample::elliptic_witness(r, f1, f2)),
                r.sign()};
            worstDual = std::max(
                worstDual, std::abs(desitter::minkowski_inner(
                               desitter::lift_circle(m1).gamma, desitter::lift_circle(em).gamma)));
        }

        geom2::Circle base = verify::sample::circle(r);
        double a1 = r.uniform(0, 2 * pi);
        double a2 = a1 + r.uniform(0.5, pi);
        Point x1 = base.center + base.radius * Point{std::cos(a1), std::sin(a1)};
        Point x2 = base.center + base.radius * Point{std::cos(a2), std::sin(a2)};
        Point witness{r.uniform(-3, 3), r.uniform(-3, 3)};
        auto other = geom2::circle_through(x1, x2, witness);
        if (std::get_if<geom2::Circle>(&other) && dist(witness, x1) > 0.2 &&
            dist(witness, x2) > 0.2) {
            desitter::OrientedCircle o1{base, r.sign()};
            desitter::OrientedCircle o2{other, r.sign()};
            double theta = desitter::intersection_angle(o1, o2);
            worstCos = std::max(worstCos,
                                std::abs(std::cos(theta) -
                                         dot(desitter::oriented_tangent(o1, x1),
                                             desitter::oriented_tangent(o2, x1))));
        }
    }
    report(7, "de Sitter lifts satisfy the Lorentz-geometric laws",
           worstNorm < 1e-12 && worstCosh < 1e-8 && worstCos < 1e-8 && worstDual < 1e-9 &&
               worstAdd < 1e-8,
           "norm " + fmt(worstNorm) + " < 1e-12, cosh " + fmt(worstCosh) + " < 1e-8, cos " +
               fmt(worstCos) + " < 1e-8, duality " + fmt(worstDual) + " < 1e-9, additivity " +
               fmt(worstAdd) + " < 1e-8");
}

// 8. Group laws of the rotation/homothety actions.
void criterion_8() {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        rng::Rng r(rng::derive(49, i));
        shape::ShapeClass c{verify::sample::disc_point(r, 0.6)};
        double t1 = r.uniform(-3, 3), t2 = r.uniform(-3, 3);
        double l1 = r.uniform(-1, 0.3), l2 = r.uniform(-1, 0.3);
        if (std::exp(l1 + l2) * norm(c.w) >= 0.999) continue;
        worst = std::max(worst, dist(classops::rotate_class(classops::rotate_class(c, t1), t2).w,
                                     classops::rotate_class(c, t1 + t2).w));
        worst = std::max(worst, dist(classops::scale_class(classops::scale_class(c, l1), l2).w,
                                     classops::scale_class(c, l1 + l2).w));
        worst = std::max(worst, dist(classops::rotate_class(classops::scale_class(c, l1), t1).w,
                                     classops::scale_class(classops::rotate_class(c, t1), l1).w));
    }
    report(8, "rotation/homothety group laws", worst < 1e-12, "worst " + fmt(worst) + " < 1e-12");
}

// 9. CLI determinism: two identical `verify all --seed 42` runs are
//    byte-identical and fast.
void criterion_9(const char* binary) {
    if (!binary) {
        report(9, "CLI verify determinism", false, "binary path not supplied");
        return;
    }
    auto capture = [&](const std::string& out) {
        std::string cmd = std::string(binary) + " verify all --seed 42 > " + out;
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    std::string out1 = "/tmp/trimoduli_accept_1.json";
    std::string out2 = "/tmp/trimoduli_accept_2.json";
    auto start = std::chrono::steady_clock::now();
    bool ok1 = capture(out1);
    bool ok2 = capture(out2);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ifstream f1(out1), f2(out2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    bool identical = ok1 && ok2 && !s1.str().empty() && s1.str() == s2.str();
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    report(9, "CLI verify determinism", identical && seconds < 60.0,
           std::string(identical ? "byte-identical" : "MISMATCH") + ", " + fmt(seconds) + " s");
}

}  // namespace

int main(int argc, char** argv) {
    criteria_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(argc > 1 ? argv[1] : nullptr);
    std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures;
}
