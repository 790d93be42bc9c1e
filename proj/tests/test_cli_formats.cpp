#include <cstdlib>

#include "test_util.hpp"
#include "trimoduli/json_io.hpp"
#include "trimoduli/json_out.hpp"
#include "trimoduli/svg.hpp"

using namespace tt;
using jsonout::Value;
using Object = jsonout::Value::Object;
using Array = jsonout::Value::Array;

TEST_CASE("json output preserves member order and round-trips doubles") {
    Value v{Object{{"b", Value(1.0)}, {"a", Value(Array{0.1, -0.0, 1e300})}, {"s", Value("x\"y")}}};
    std::string text = jsonout::dump(v);
    CHECK(text.find("\"b\"") < text.find("\"a\""));
    CHECK(text.find("\\\"") != std::string::npos);

    rng::Rng r(801);
    for (int i = 0; i < 1000; ++i) {
        double d = std::exp(r.uniform(-200.0, 200.0)) * r.sign();
        std::string s = jsonout::detail::format_double(d);
        CHECK(std::strtod(s.c_str(), nullptr) == d);  // 17 digits: exact round-trip
    }
    CHECK(jsonout::detail::format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("emitted JSON parses back to the same values") {
    Point p{0.1 + 0.2, -1.0 / 3.0};
    std::string text = jsonout::dump(Value{Object{{"P", Value(p)}, {"r", Value(1e-17)}}});
    auto parsed = jsonin::parse(text);
    CHECK(jsonin::get_point(parsed["P"], "P").x == p.x);
    CHECK(jsonin::get_point(parsed["P"], "P").y == p.y);
    CHECK(parsed["r"].get<double>() == 1e-17);
}

TEST_CASE("parsed requests reject malformed fields with the offending name") {
    auto j = jsonin::parse(R"({"sides": [1, 2], "triangle": {"A": [0,1]}})");
    CHECK_THROWS_AS(jsonin::get_sides(j["sides"], "sides"), DomainError);
    try {
        jsonin::get_triangle(j["triangle"], "triangle");
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.field() == "triangle");
    }
    CHECK_THROWS_AS(jsonin::parse("{nope"), DomainError);

    auto tri = jsonin::get_triangle(jsonin::parse(R"([[0,1],[0,0],[1,0]])"), "t");
    check_point(tri.A, 0, 1, 0);
}

TEST_CASE("pencil figure emits exactly one path per member") {
    std::string svg = svg::pencil({-1, 0}, {1, 0}, 5);
    std::size_t paths = 0, pos = 0;
    while ((pos = svg.find("<path", pos)) != std::string::npos) {
        ++paths;
        ++pos;
    }
    CHECK(paths == 10);
    CHECK(svg.find("viewBox=\"-2 -2 4 4\"") != std::string::npos);
    CHECK(svg.find("scale(1,-1)") != std::string::npos);

    CHECK(svg::pencil({-1, 0}, {1, 0}, 5) == svg);  // deterministic
}

TEST_CASE("disc orbit figure carries one marker per step on the orbit radius") {
    shape::ShapeClass c{{0.2, 0.1}};
    std::string svg = svg::disc_orbit(c, 12);
    std::size_t markers = 0, pos = 0;
    while ((pos = svg.find("class=\"marker\"", pos)) != std::string::npos) {
        ++markers;
        ++pos;
    }
    CHECK(markers == 12);
}

TEST_CASE("cevian figure contains the construction segments and inner triangle") {
    std::string svg = svg::cevian_figure(shape::Triangle(shape::A0, shape::B0, shape::C0),
                                         "routh", 0.0, 0.3);
    std::size_t lines = 0, pos = 0;
    while ((pos = svg.find("<line", pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 3);  // Routh cevians coincide pairwise: three segments
    std::size_t paths = 0;
    pos = 0;
    while ((pos = svg.find("<path", pos)) != std::string::npos) {
        ++paths;
        ++pos;
    }
    CHECK(paths == 2);  // outer and inner triangle
    CHECK_THROWS_AS(svg::cevian_figure(shape::Triangle(shape::A0, shape::B0, shape::C0), "nope",
                                       0.0, 0.3),
                    DomainError);
}
