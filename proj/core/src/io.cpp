#include "latk/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace latk {

namespace {

struct LineScanner {
    std::string_view text;
    int line_no;
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    }
    bool done() {
        skip_spaces();
        return pos >= text.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(line_no) + ": " + what, line_no);
    }
    void expect(char c) {
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }
    int integer() {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(
                                 static_cast<unsigned char>(text[start]))))
            fail("expected an integer");
        try {
            return std::stoi(std::string(text.substr(start, pos - start)));
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }
    Point2 point2() {
        skip_spaces();
        expect('(');
        int x = integer();
        expect(',');
        int y = integer();
        expect(')');
        return {x, y};
    }
    Point3 point3() {
        skip_spaces();
        expect('(');
        int x = integer();
        expect(',');
        int y = integer();
        expect(',');
        int z = integer();
        expect(')');
        return {x, y, z};
    }
    std::string word() {
        skip_spaces();
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != ':')
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
};

// Calls fn(label, scanner) for every non-empty, non-comment line.
template <typename Fn>
void scan_lines(std::string_view text, Fn&& fn) {
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);

        LineScanner sc{raw, line_no};
        if (sc.done())
            continue;
        std::string label = sc.word();
        sc.skip_spaces();
        if (sc.pos >= raw.size() || raw[sc.pos] != ':')
            sc.fail("expected 'component:' or 'crossing:'");
        ++sc.pos;
        fn(label, sc);
        if (start > text.size())
            break;
    }
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
    std::vector<std::vector<Point2>> components;
    std::map<Point2, CrossingType> crossings;
    scan_lines(text, [&](const std::string& label, LineScanner& sc) {
        if (label == "component") {
            std::vector<Point2> corners;
            while (!sc.done())
                corners.push_back(sc.point2());
            if (corners.empty())
                sc.fail("component line has no points");
            components.push_back(std::move(corners));
        } else if (label == "crossing") {
            Point2 p = sc.point2();
            std::string letter = sc.word();
            CrossingType type;
            if (letter == "X")
                type = CrossingType::XOver;
            else if (letter == "Y")
                type = CrossingType::YOver;
            else
                sc.fail("crossing type must be X or Y");
            if (!sc.done())
                sc.fail("trailing input after crossing declaration");
            if (!crossings.emplace(p, type).second)
                sc.fail("crossing " + to_string(p) + " declared twice");
        } else {
            sc.fail("unknown label '" + label + "'");
        }
    });
    return Diagram::build(std::move(components), std::move(crossings));
}

std::string serialize_diagram(const Diagram& d) {
    std::string out;
    for (const auto& comp : d.components()) {
        out += "component:";
        for (const Point2& p : comp)
            out += " " + to_string(p);
        out += "\n";
    }
    for (const auto& [p, type] : d.crossings())
        out += "crossing: " + to_string(p) + " " + crossing_letter(type) + "\n";
    return out;
}

Link3 parse_link3(std::string_view text) {
    std::vector<std::vector<Point3>> components;
    scan_lines(text, [&](const std::string& label, LineScanner& sc) {
        if (label != "component")
            sc.fail("unknown label '" + label + "'");
        std::vector<Point3> corners;
        while (!sc.done())
            corners.push_back(sc.point3());
        if (corners.empty())
            sc.fail("component line has no points");
        components.push_back(std::move(corners));
    });
    return Link3::build(std::move(components));
}

std::string serialize_link3(const Link3& k) {
    std::string out;
    for (const auto& comp : k.components()) {
        out += "component:";
        for (const Point3& p : comp)
            out += " " + to_string(p);
        out += "\n";
    }
    return out;
}

std::string render_svg(const Diagram& d, const SvgStyle& style) {
    int minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool first = true;
    for (const auto& comp : d.components()) {
        for (const Point2& p : comp) {
            if (first) {
                minx = maxx = p.x;
                miny = maxy = p.y;
                first = false;
            } else {
                minx = std::min(minx, p.x);
                maxx = std::max(maxx, p.x);
                miny = std::min(miny, p.y);
                maxy = std::max(maxy, p.y);
            }
        }
    }
    const int s = style.scale;
    // breaks must stay inside the unit cells next to the crossing
    const int gap_px =
        std::clamp(int(std::lround(style.gap * s)), 1, std::max(1, s / 2 - 1));
    auto sx = [&](int x) { return (x - minx + style.margin_cells) * s; };
    auto sy = [&](int y) { return (maxy - y + style.margin_cells) * s; };
    const int width = (maxx - minx + 2 * style.margin_cells) * s;
    const int height = (maxy - miny + 2 * style.margin_cells) * s;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    svg << "<g fill=\"none\" stroke=\"#000000\" stroke-width=\"" << style.stroke_width
        << "\" stroke-linecap=\"round\">\n";

    auto emit = [&](int x1, int y1, int x2, int y2) {
        svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
            << "\" y2=\"" << y2 << "\"/>\n";
    };

    for (const auto& comp : d.components()) {
        const std::size_t n = comp.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 a = comp[i];
            const Point2 b = comp[(i + 1) % n];
            const Axis run_axis = a.y == b.y ? Axis::X : Axis::Y;
            // crossings interior to this run where the run is the under-strand
            std::vector<Point2> breaks;
            for (const auto& [c, type] : d.crossings()) {
                if (over_axis(type) == run_axis)
                    continue;
                const bool inside =
                    run_axis == Axis::X
                        ? (c.y == a.y && c.x > std::min(a.x, b.x) &&
                           c.x < std::max(a.x, b.x))
                        : (c.x == a.x && c.y > std::min(a.y, b.y) &&
                           c.y < std::max(a.y, b.y));
                if (inside)
                    breaks.push_back(c);
            }
            const bool forward = run_axis == Axis::X ? b.x > a.x : b.y > a.y;
            std::sort(breaks.begin(), breaks.end(), [&](const Point2& u, const Point2& v) {
                return forward ? u < v : v < u;
            });
            int px = sx(a.x), py = sy(a.y);
            const int dx = run_axis == Axis::X ? (forward ? 1 : -1) : 0;
            const int dy = run_axis == Axis::Y ? (forward ? -1 : 1) : 0;  // svg y down
            for (const Point2& c : breaks) {
                emit(px, py, sx(c.x) - dx * gap_px, sy(c.y) - dy * gap_px);
                px = sx(c.x) + dx * gap_px;
                py = sy(c.y) + dy * gap_px;
            }
            emit(px, py, sx(b.x), sy(b.y));
        }
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

std::string export_obj(const Link3& k) {
    std::ostringstream obj;
    std::size_t base = 1;
    std::size_t comp_no = 0;
    for (const auto& comp : k.components()) {
        ++comp_no;
        obj << "o component_" << comp_no << "\n";
        for (const Point3& p : comp)
            obj << "v " << p.x << " " << p.y << " " << p.z << "\n";
        obj << "l";
        for (std::size_t i = 0; i < comp.size(); ++i)
            obj << " " << base + i;
        obj << " " << base << "\n";
        base += comp.size();
    }
    return obj.str();
}

}  // namespace latk
