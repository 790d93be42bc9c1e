// tri-moduli: JSON in / JSON out front end for the triangle moduli library,
// plus SVG figure emission and the seeded verification suites.
//
// Exit codes: 0 success, 2 input or domain error, 3 internal assertion
// (a failed self-check is a bug in the library, never a user error).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "trimoduli/json_io.hpp"
#include "trimoduli/json_out.hpp"
#include "trimoduli/svg.hpp"
#include "trimoduli/trimoduli.hpp"

namespace {

using namespace trimoduli;
using jsonin::json;
using jsonout::Value;
using Object = jsonout::Value::Object;
using Array = jsonout::Value::Array;

struct Options {
    std::string jsonPath = "-";
    std::string outPath;
    double tolRel = 0.0;  // 0 = library default
    std::int64_t seed = 42;
    int count = 1000;
    bool degrees = false;

    Tolerance tolerance() const {
        Tolerance t;
        if (tolRel > 0.0) t.rel = tolRel;
        return t;
    }
    double angle_in(double v) const { return degrees ? v * pi / 180.0 : v; }
};

std::string read_input(const Options& opt) {
    if (opt.jsonPath == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(opt.jsonPath);
    if (!f) throw DomainError("cannot open input file: " + opt.jsonPath, "--json");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.outPath, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + opt.outPath, "--out");
    f << text;
}

Value jpoint3(space3::Point3 p) { return Array{p.x, p.y, p.z}; }

Value jtriangle(const shape::Triangle& t) {
    return Object{{"A", Value(t.A)}, {"B", Value(t.B)}, {"C", Value(t.C)}};
}

// ---------------------------------------------------------------- commands

Value run_shape(const json& in, const Options&) {
    shape::ShapeClass cls{{0, 0}};
    Point sig{};
    double a, b, c;
    if (in.contains("triangle")) {
        shape::Triangle t = jsonin::get_triangle(in["triangle"], "triangle");
        shape::SideLengths s = shape::side_lengths(t);
        a = s.a, b = s.b, c = s.c;
        sig = shape::sigma(t);
        cls = shape::phi(t);
    } else if (in.contains("sides")) {
        shape::SideLengths s = jsonin::get_sides(in["sides"], "sides");
        a = s.a, b = s.b, c = s.c;
        sig = shape::sigma_of_sides(s);
        cls = shape::phi_of_sides(s);
    } else {
        throw DomainError("need either \"triangle\" or \"sides\"", "input");
    }
    return Object{{"sigma", Value(sig)},
                  {"phi", Value(cls.w)},
                  {"pompeiu", Value(shape::pompeiu_coordinate(cls))},
                  {"sideRatios", Array{1.0, b / a, c / a}}};
}

Value run_solve(const json& in, const Options& opt) {
    shape::SideLengths s = jsonin::get_sides(jsonin::require(in, "sides"), "sides");
    pompeiu::PompeiuSolution sol = pompeiu::solve(s, opt.tolerance());
    double d1 = dist(sol.p, shape::A0);
    double d2 = dist(sol.p, shape::B0);
    double d3 = dist(sol.p, shape::C0);
    double mean = (d1 / s.a + d2 / s.b + d3 / s.c) / 3.0;
    double residual = std::max({std::abs(d1 / s.a - mean), std::abs(d2 / s.b - mean),
                                std::abs(d3 / s.c - mean)}) /
                      mean;
    Object out{{"P", Value(sol.p)}};
    if (sol.pPrime) out.emplace_back("PPrime", Value(*sol.pPrime));
    if (sol.nearEquilateral) out.emplace_back("nearEquilateral", Value(true));
    out.emplace_back("distances", Array{d1, d2, d3});
    out.emplace_back("ratioResidual", Value(residual));
    return out;
}

Value run_act(const json& in, const Options& opt) {
    double theta = opt.angle_in(in.contains("theta") ? jsonin::get_number(in["theta"], "theta") : 0.0);
    double lambda = in.contains("lambda") ? jsonin::get_number(in["lambda"], "lambda") : 0.0;
    std::string mode = in.contains("mode") ? in["mode"].get<std::string>() : "class";

    if (mode == "vertex") {
        if (!in.contains("triangle"))
            throw DomainError("vertex mode needs a \"triangle\" input", "triangle");
        shape::Triangle t = jsonin::get_triangle(in["triangle"], "triangle");
        shape::Triangle moved = classops::move_vertex(t, theta, lambda, opt.tolerance());
        shape::ShapeClass cls = shape::phi(moved);
        return Object{{"phi", Value(cls.w)},
                      {"pompeiu", Value(shape::pompeiu_coordinate(cls))},
                      {"triangle", jtriangle(moved)}};
    }
    if (mode != "class") throw DomainError("mode must be \"class\" or \"vertex\"", "mode");

    shape::ShapeClass cls{{0, 0}};
    if (in.contains("class")) {
        cls = shape::ShapeClass{jsonin::get_point(in["class"], "class")};
    } else if (in.contains("triangle")) {
        cls = shape::phi(jsonin::get_triangle(in["triangle"], "triangle"));
    } else {
        throw DomainError("need either \"class\" or \"triangle\"", "input");
    }
    shape::ShapeClass moved = classops::scale_class(classops::rotate_class(cls, theta), lambda);
    return Object{{"phi", Value(moved.w)},
                  {"pompeiu", Value(shape::pompeiu_coordinate(moved))}};
}

Value run_cevian(const json& in, const Options&) {
    shape::Triangle t = jsonin::get_triangle(jsonin::require(in, "triangle"), "triangle");
    std::string variant = jsonin::require(in, "variant").get<std::string>();
    double q = jsonin::get_number(jsonin::require(in, "q"), "q");

    double pEff;
    shape::Triangle image = [&]() -> shape::Triangle {
        if (variant == "tq") {
            pEff = 0.0;
            return cevian::t_q(t, q);
        }
        if (variant == "routh") {
            pEff = 1.0 - q;
            return cevian::routh(t, q);
        }
        if (variant == "tpq") {
            pEff = jsonin::get_number(jsonin::require(in, "p"), "p");
            return cevian::t_pq(t, {pEff, q});
        }
        throw DomainError("variant must be tq, routh, or tpq", "variant");
    }();

    double predicted = cevian::theta_pq(pEff, q);
    Cplx ratio = cx(shape::phi(image).w) / cx(shape::phi(t).w);
    double measured = wrap_angle(std::arg(ratio));
    return Object{{"triangle", jtriangle(image)},
                  {"thetaPredicted", Value(predicted)},
                  {"thetaMeasured", Value(measured)}};
}

Value run_circle3d(const json& in, const Options& opt) {
    shape::SideLengths s = jsonin::get_sides(jsonin::require(in, "sides"), "sides");
    space3::Circle3 c = space3::similarity_circle(s, opt.tolerance());
    auto [w, wPrime] = space3::foci(c);
    return Object{{"center", jpoint3(c.center)},
                  {"radius", Value(c.radius)},
                  {"planeNormal", jpoint3(c.planeNormal)},
                  {"W", jpoint3(w)},
                  {"WPrime", jpoint3(wPrime)}};
}

desitter::OrientedCircle parse_oriented(const json& j, const std::string& field) {
    int ori = 1;
    if (j.contains("orientation")) {
        double o = jsonin::get_number(j["orientation"], field + ".orientation");
        if (o != 1.0 && o != -1.0)
            throw DomainError("orientation must be +1 or -1", field + ".orientation");
        ori = static_cast<int>(o);
    }
    if (j.contains("center")) {
        double r = jsonin::get_number(jsonin::require(j, "radius"), field + ".radius");
        if (!(r > 0.0)) throw DomainError("radius must be positive", field + ".radius");
        return {geom2::Circle{jsonin::get_point(j["center"], field + ".center"), r}, ori};
    }
    if (j.contains("normal")) {
        Point n = jsonin::get_point(j["normal"], field + ".normal");
        double d = jsonin::get_number(jsonin::require(j, "offset"), field + ".offset");
        return {geom2::make_line(n, d), ori};
    }
    throw DomainError("circle needs center+radius or normal+offset", field);
}

Value run_desitter(const json& in, const Options& opt) {
    const json& arr = jsonin::require(in, "circles");
    if (!arr.is_array() || arr.empty() || arr.size() > 2)
        throw DomainError("expected one or two circles", "circles");
    Array gammas;
    std::vector<desitter::DeSitterPoint> lifted;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto oc = parse_oriented(arr[i], "circles[" + std::to_string(i) + "]");
        auto g = desitter::lift_circle(oc);
        lifted.push_back(g);
        gammas.push_back(Array{g.gamma.x0, g.gamma.x1, g.gamma.x2, g.gamma.x3});
    }
    Object out{{"gammas", Value(gammas)}};
    if (lifted.size() == 2) {
        Tolerance tol = opt.tolerance();
        double ip = desitter::minkowski_inner(lifted[0].gamma, lifted[1].gamma);
        out.emplace_back("innerProduct", Value(ip));
        if (ip >= 1.0 - tol.rel) {
            out.emplace_back("lambda", Value(desitter::detail::acosh_stable(std::max(ip, 1.0))));
        } else if (ip >= -1.0 - tol.rel) {
            out.emplace_back("theta", Value(std::acos(std::clamp(ip, -1.0, 1.0))));
        } else {
            throw DomainError("circles are disjoint with inconsistent orientations", "circles");
        }
    }
    return out;
}

std::string run_plot(const json& in, const Options& opt) {
    std::string figure = jsonin::require(in, "figure").get<std::string>();
    Tolerance tol = opt.tolerance();
    if (figure == "pencil") {
        Point f1{-1.0, 0.0}, f2{1.0, 0.0};
        if (in.contains("foci")) {
            const json& f = in["foci"];
            if (!f.is_array() || f.size() != 2)
                throw DomainError("foci must be a pair of points", "foci");
            f1 = jsonin::get_point(f[0], "foci[0]");
            f2 = jsonin::get_point(f[1], "foci[1]");
        }
        int members = in.contains("members") ? in["members"].get<int>() : 5;
        return svg::pencil(f1, f2, members, tol);
    }
    if (figure == "disc-orbit") {
        shape::ShapeClass c{jsonin::get_point(jsonin::require(in, "class"), "class")};
        int steps = in.contains("steps") ? in["steps"].get<int>() : 12;
        return svg::disc_orbit(c, steps);
    }
    if (figure == "cevian") {
        shape::Triangle t = in.contains("triangle")
                                ? jsonin::get_triangle(in["triangle"], "triangle")
                                : shape::Triangle(shape::A0, shape::B0, shape::C0);
        std::string variant = in.contains("variant") ? in["variant"].get<std::string>() : "routh";
        double q = jsonin::get_number(jsonin::require(in, "q"), "q");
        double p = in.contains("p") ? jsonin::get_number(in["p"], "p") : 0.0;
        return svg::cevian_figure(t, variant, p, q);
    }
    if (figure == "circle3d") {
        return svg::circle3d_figure(jsonin::get_sides(jsonin::require(in, "sides"), "sides"));
    }
    throw DomainError("unknown figure: " + figure, "figure");
}

int run_verify(const Options& opt, const std::string& suiteArg, bool haveJson,
               const std::string& jsonText) {
    std::string suite = suiteArg;
    int n = opt.count;
    std::uint64_t seed = static_cast<std::uint64_t>(opt.seed);
    if (haveJson) {
        json in = jsonin::parse(jsonText);
        if (in.contains("suite")) suite = in["suite"].get<std::string>();
        if (in.contains("n")) n = in["n"].get<int>();
        if (in.contains("seed")) seed = in["seed"].get<std::uint64_t>();
    }
    auto results = verify::run(suite, n, seed);
    Array suites;
    std::int64_t pass = 0, fail = 0;
    double worst = 0.0;
    for (const auto& r : results) {
        suites.push_back(Object{{"name", Value(r.name)},
                                {"pass", Value(std::int64_t(r.pass))},
                                {"fail", Value(std::int64_t(r.fail))},
                                {"worstResidual", Value(r.worstResidual)}});
        pass += r.pass;
        fail += r.fail;
        worst = std::max(worst, r.worstResidual);
    }
    Object report{{"suite", Value(suite)},
                  {"n", Value(std::int64_t(n))},
                  {"seed", Value(std::int64_t(seed))},
                  {"suites", Value(suites)},
                  {"pass", Value(pass)},
                  {"fail", Value(fail)},
                  {"worstResidual", Value(worst)},
                  {"ok", Value(fail == 0)}};
    write_output(opt, jsonout::dump(report));
    return fail == 0 ? 0 : 3;
}

int emit_error(const Options& opt, int code, const std::string& message,
               const std::string& field) {
    Object err{{"code", Value(std::int64_t(code))}, {"message", Value(message)}};
    if (!field.empty()) err.emplace_back("field", Value(field));
    std::string text = jsonout::dump(Object{{"error", Value(std::move(err))}});
    try {
        write_output(opt, text);
    } catch (const std::exception&) {
        std::cout << text;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moduli-space computations for similarity classes of triangles"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--json", opt.jsonPath, "input JSON file ('-' = stdin)");
    app.add_option("--out", opt.outPath, "output file (default stdout)");
    app.add_option("--tol", opt.tolRel, "relative comparison tolerance override");
    app.add_option("--seed", opt.seed, "master seed for verification suites");
    app.add_option("--n", opt.count, "cases per verification suite");
    app.add_flag("--degrees", opt.degrees, "interpret input angles as degrees");

    auto* cmdShape = app.add_subcommand("shape", "sigma, phi, and Pompeiu coordinates");
    auto* cmdSolve = app.add_subcommand("solve", "interior/exterior Pompeiu points of a side triple");
    auto* cmdAct = app.add_subcommand("act", "rotation/homothety action on a class or triangle");
    auto* cmdCevian = app.add_subcommand("cevian", "equidivision, Routh, and generalized operations");
    auto* cmdCircle3d = app.add_subcommand("circle3d", "3D similarity circle of a side triple");
    auto* cmdDesitter = app.add_subcommand("desitter", "de Sitter lifts and geodesic invariants");
    auto* cmdPlot = app.add_subcommand("plot", "emit an SVG figure");
    auto* cmdVerify = app.add_subcommand("verify", "run seeded verification suites");
    std::string suite = "all";
    cmdVerify->add_option("suite", suite, "all | thm35 | thm51 | pencils | desitter | space3");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmdVerify)) {
            bool haveJson = opt.jsonPath != "-";
            return run_verify(opt, suite, haveJson, haveJson ? read_input(opt) : std::string{});
        }
        json in = jsonin::parse(read_input(opt));
        if (app.got_subcommand(cmdPlot)) {
            write_output(opt, run_plot(in, opt));
            return 0;
        }
        Value result;
        if (app.got_subcommand(cmdShape)) result = run_shape(in, opt);
        else if (app.got_subcommand(cmdSolve)) result = run_solve(in, opt);
        else if (app.got_subcommand(cmdAct)) result = run_act(in, opt);
        else if (app.got_subcommand(cmdCevian)) result = run_cevian(in, opt);
        else if (app.got_subcommand(cmdCircle3d)) result = run_circle3d(in, opt);
        else if (app.got_subcommand(cmdDesitter)) result = run_desitter(in, opt);
        write_output(opt, jsonout::dump(result));
        return 0;
    } catch (const DomainError& e) {
        return emit_error(opt, 2, e.what(), e.field());
    } catch (const InternalError& e) {
        return emit_error(opt, 3, e.what(), {});
    } catch (const std::exception& e) {
        return emit_error(opt, 2, e.what(), {});
    }
}
