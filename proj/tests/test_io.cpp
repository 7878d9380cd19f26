#include "doctest.h"

#include <sstream>

#include "latk/io.hpp"
#include "latk/lift.hpp"
#include "latk/samples.hpp"

#include "support.hpp"

using namespace latk;
using namespace latk::testing;

namespace {

int error_line(const std::string& text) {
    try {
        parse_diagram(text);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SyntaxError);
        return e.line();
    }
    FAIL("expected a syntax error");
    return -1;
}

// Horizontal/vertical coverage of SVG line elements, for gap inspection.
struct SvgLines {
    std::vector<std::array<int, 4>> lines;  // x1,y1,x2,y2

    bool covers(int x1, int y1, int x2, int y2) const {
        for (const auto& l : lines) {
            const int lox = std::min(l[0], l[2]), hix = std::max(l[0], l[2]);
            const int loy = std::min(l[1], l[3]), hiy = std::max(l[1], l[3]);
            if (std::min(x1, x2) >= lox && std::max(x1, x2) <= hix &&
                std::min(y1, y2) >= loy && std::max(y1, y2) <= hiy &&
                (lox == hix) == (x1 == x2))
                return true;
        }
        return false;
    }
};

SvgLines parse_svg_lines(const std::string& svg) {
    SvgLines out;
    std::size_t pos = 0;
    while ((pos = svg.find("<line ", pos)) != std::string::npos) {
        std::array<int, 4> c{};
        const char* names[4] = {"x1=\"", "y1=\"", "x2=\"", "y2=\""};
        for (int i = 0; i < 4; ++i) {
            std::size_t at = svg.find(names[i], pos);
            REQUIRE(at != std::string::npos);
            c[i] = std::stoi(svg.substr(at + 4));
        }
        out.lines.push_back(c);
        ++pos;
    }
    return out;
}

}  // namespace

TEST_CASE("parsing simple diagram files") {
    SUBCASE("rectangle") {
        const Diagram d = parse_diagram("component: (0,0) (1,0) (1,1) (0,1)\n");
        CHECK(d == Diagram::build({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}, {}));
    }
    SUBCASE("twist with crossing declaration") {
        const Diagram d = parse_diagram(
            "# a one-crossing knot\n"
            "component: (0,1) (2,1) (2,2) (1,2) (1,0) (0,0)\n"
            "crossing: (1,1) X\n");
        CHECK(d == samples::twist());
    }
    SUBCASE("degree-4 vertex without a declaration") {
        CHECK_THROWS_AS(
            parse_diagram("component: (0,1) (2,1) (2,2) (1,2) (1,0) (0,0)\n"),
            Error);
        try {
            parse_diagram("component: (0,1) (2,1) (2,2) (1,2) (1,0) (0,0)\n");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UndeclaredCrossing);
            CHECK(e.where() == Point2{1, 1});
        }
    }
}

TEST_CASE("syntax errors carry their line number") {
    CHECK(error_line("component: (0,0) (1,0) (1,1) (0,1)\nbogus: (1,1)\n") == 2);
    CHECK(error_line("component: (0,0) (1,0 (1,1) (0,1)\n") == 1);
    CHECK(error_line("\n\ncrossing: (1,1) Q\n") == 3);
    CHECK(error_line("crossing: (1,1) X\ncrossing: (1,1) Y\n") == 2);
    CHECK(error_line("component:\n") == 1);
}

TEST_CASE("canonical serialization round-trips") {
    std::vector<Diagram> corpus = two_rectangles_all_types();
    for (const Diagram& d : small_corpus(120))
        corpus.push_back(d);
    corpus.push_back(samples::twist());
    corpus.push_back(samples::pcg_cycle_probe());
    for (const Diagram& d : corpus) {
        const std::string text = serialize_diagram(d);
        CHECK(parse_diagram(text) == d);
        CHECK(serialize_diagram(parse_diagram(text)) == text);
    }
}

TEST_CASE("serialized components are sorted and start at their smallest corner") {
    const std::string text = serialize_diagram(samples::celtic());
    CHECK(text ==
          "component: (0,1) (0,2) (3,2) (3,1)\n"
          "component: (1,0) (1,3) (2,3) (2,0)\n"
          "crossing: (1,1) X\n"
          "crossing: (1,2) Y\n"
          "crossing: (2,1) Y\n"
          "crossing: (2,2) X\n");
}

TEST_CASE("link3 files round-trip and reject bad steps") {
    const LiftResult r = lift_diagram(samples::twist());
    REQUIRE(r.lifted());
    const std::string text = serialize_link3(*r.link);
    CHECK(parse_link3(text) == *r.link);
    CHECK(serialize_link3(parse_link3(text)) == text);

    const Link3 box = Link3::build({{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}});
    CHECK(parse_link3(serialize_link3(box)) == box);

    try {
        parse_link3("component: (0,0,0) (1,1,0) (1,1,1) (0,0,1)\n");
        FAIL("diagonal step accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonAxisParallelStep);
    }
}

TEST_CASE("svg: under-strands break, over-strands do not") {
    const SvgStyle style;
    const int s = style.scale;

    SUBCASE("rectangle: four solid lines") {
        const Diagram d = Diagram::build({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}, {});
        const SvgLines lines = parse_svg_lines(render_svg(d));
        CHECK(lines.lines.size() == 4);
    }
    SUBCASE("twist: one gap on the under (y) strand") {
        const Diagram d = samples::twist();  // XOver at (1,1)
        const std::string svg = render_svg(d);
        const SvgLines lines = parse_svg_lines(svg);
        // 6 corner-to-corner runs, one of them split in two
        CHECK(lines.lines.size() == 7);
        // world (1,1) maps to ((1-0+1)s, (2-1+1)s) with margin 1
        const int cx = 2 * s, cy = 2 * s;
        CHECK(lines.covers(cx - s, cy, cx + s, cy));        // x-strand solid
        CHECK_FALSE(lines.covers(cx, cy - 1, cx, cy + 1));  // y-strand broken
        CHECK(lines.covers(cx, cy - s, cx, cy - s / 2));    // but present above
        CHECK(lines.covers(cx, cy + s / 2, cx, cy + s));    // and below
    }
    SUBCASE("celtic link: four gaps alternating around the square") {
        const Diagram d = samples::celtic();
        const SvgLines lines = parse_svg_lines(render_svg(d));
        CHECK(lines.lines.size() == 12);  // 8 runs + 4 splits
        // (1,1) XOver: vertical broken, horizontal solid
        auto world_x = [&](int x) { return (x + 1) * s; };
        auto world_y = [&](int y) { return (4 - y) * s; };
        struct Probe {
            Point2 c;
            bool vertical_broken;
        };
        for (const Probe& probe : std::initializer_list<Probe>{
                 {{1, 1}, true}, {{2, 1}, false}, {{2, 2}, true}, {{1, 2}, false}}) {
            const int cx = world_x(probe.c.x), cy = world_y(probe.c.y);
            CHECK(lines.covers(cx - 1, cy, cx + 1, cy) == probe.vertical_broken);
            CHECK(lines.covers(cx, cy - 1, cx, cy + 1) == !probe.vertical_broken);
        }
    }
    SUBCASE("deterministic output") {
        const Diagram d = samples::celtic();
        CHECK(render_svg(d) == render_svg(d));
    }
}

TEST_CASE("obj export lists one polyline object per component") {
    const LiftResult r = lift_diagram(samples::rings());
    REQUIRE(r.lifted());
    const std::string obj = export_obj(*r.link);

    std::size_t vertex_lines = 0, object_lines = 0, poly_lines = 0;
    std::istringstream in(obj);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) == 0)
            ++vertex_lines;
        else if (line.rfind("o ", 0) == 0)
            ++object_lines;
        else if (line.rfind("l ", 0) == 0) {
            ++poly_lines;
            std::istringstream ls(line.substr(2));
            std::vector<int> idx;
            int v;
            while (ls >> v)
                idx.push_back(v);
            CHECK(idx.front() == idx.back());  // closed polyline
        }
    }
    CHECK(vertex_lines == r.link->corner_count());
    CHECK(object_lines == r.link->components().size());
    CHECK(poly_lines == r.link->components().size());
}
