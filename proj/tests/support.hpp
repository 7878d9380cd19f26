#pragma once

#include <array>
#include <map>
#include <set>
#include <vector>

#include "latk/diagram.hpp"
#include "latk/generator.hpp"
#include "latk/samples.hpp"

namespace latk::testing {

// Independent re-expansion of corner cycles into unit edges; used as the
// oracle for degree and incidence claims instead of Diagram internals.
inline std::multiset<Edge2> brute_edges(const std::vector<std::vector<Point2>>& comps) {
    std::multiset<Edge2> edges;
    for (const auto& comp : comps) {
        const std::size_t n = comp.size();
        for (std::size_t i = 0; i < n; ++i) {
            Point2 cur = comp[i];
            const Point2 goal = comp[(i + 1) % n];
            while (cur != goal) {
                Point2 step{0, 0};
                if (goal.x != cur.x)
                    step.x = goal.x > cur.x ? 1 : -1;
                else
                    step.y = goal.y > cur.y ? 1 : -1;
                edges.insert(Edge2(cur, cur + step));
                cur = cur + step;
            }
        }
    }
    return edges;
}

inline std::map<Point2, int> brute_degrees(const std::vector<std::vector<Point2>>& comps) {
    std::map<Point2, int> deg;
    for (const Edge2& e : brute_edges(comps)) {
        deg[e.a] += 1;
        deg[e.b] += 1;
    }
    return deg;
}

//直接 type-pattern test for a Celtic square: four crossings on a unit
// square with alternating types.  This is the cross-check route; the library
// detects the same squares through problem crossings and bad neighbors.
inline bool has_alternating_square(const Diagram& d) {
    const auto& xs = d.crossings();
    for (const auto& [p, t0] : xs) {
        auto i1 = xs.find(p + Point2{1, 0});
        auto i2 = xs.find(p + Point2{1, 1});
        auto i3 = xs.find(p + Point2{0, 1});
        if (i1 == xs.end() || i2 == xs.end() || i3 == xs.end())
            continue;
        if (i1->second == opposite(t0) && i2->second == t0 &&
            i3->second == opposite(t0))
            return true;
    }
    return false;
}

// Literal Def-BDE enumeration: c is a problem crossing iff some
// perpendicular pair of adjacent crossings both carry the opposite type.
inline bool brute_is_problem(const Diagram& d, const Point2& c) {
    const CrossingType want = opposite(d.crossing_type(c));
    for (const Point2& a : {c + Point2{1, 0}, c - Point2{1, 0}}) {
        for (const Point2& b : {c + Point2{0, 1}, c - Point2{0, 1}}) {
            if (d.is_crossing(a) && d.is_crossing(b) &&
                d.crossing_type(a) == want && d.crossing_type(b) == want)
                return true;
        }
    }
    return false;
}

inline std::vector<Diagram> two_rectangles_all_types() {
    std::vector<Diagram> out;
    for (int bits = 0; bits < 16; ++bits) {
        std::array<CrossingType, 4> types;
        for (int i = 0; i < 4; ++i)
            types[i] = (bits >> i) & 1 ? CrossingType::YOver : CrossingType::XOver;
        out.push_back(samples::two_rectangles(types));
    }
    return out;
}

// Small mixed-parameter corpus shared by the unit-level property tests.
inline std::vector<Diagram> small_corpus(int count, std::uint64_t seed0 = 1000) {
    static const GenParams table[] = {
        {5, 1, 1, 20000, 100}, {6, 2, 2, 20000, 0},  {6, 4, 2, 20000, 40},
        {8, 4, 2, 20000, 40},  {8, 3, 2, 20000, 60}, {8, 6, 3, 20000, 40},
        {7, 0, 1, 20000, 0},   {9, 5, 2, 20000, 60}, {10, 6, 3, 20000, 40},
        {8, 2, 3, 20000, 30},
    };
    std::vector<Diagram> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(random_diagram(seed0 + i, table[i % std::size(table)]));
    return out;
}

}  // namespace latk::testing
