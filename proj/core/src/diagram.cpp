#include "latk/diagram.hpp"

#include <algorithm>

namespace latk {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonUnitOrDiagonalStep: return "NonUnitOrDiagonalStep";
        case ErrorCode::OpenComponent: return "OpenComponent";
        case ErrorCode::EdgeReused: return "EdgeReused";
        case ErrorCode::VertexDegreeExceeds4: return "VertexDegreeExceeds4";
        case ErrorCode::TangentialCrossing: return "TangentialCrossing";
        case ErrorCode::UndeclaredCrossing: return "UndeclaredCrossing";
        case ErrorCode::TypeDeclaredAtNonCrossing: return "TypeDeclaredAtNonCrossing";
        case ErrorCode::NotACrossing: return "NotACrossing";
        case ErrorCode::GenerationBudgetExhausted: return "GenerationBudgetExhausted";
        case ErrorCode::NotTwoNearRegular: return "NotTwoNearRegular";
        case ErrorCode::NoNonCornerOnCycle: return "NoNonCornerOnCycle";
        case ErrorCode::NoProperAxis: return "NoProperAxis";
        case ErrorCode::InternalScheduleError: return "InternalScheduleError";
        case ErrorCode::NotLiftable: return "NotLiftable";
        case ErrorCode::NonAxisParallelStep: return "NonAxisParallelStep";
        case ErrorCode::CollinearCorners: return "CollinearCorners";
        case ErrorCode::NonProperProjection: return "NonProperProjection";
        case ErrorCode::SyntaxError: return "SyntaxError";
    }
    return "UnknownError";
}

namespace {

Point2 step_direction(const Point2& from, const Point2& to) {
    int dx = to.x - from.x;
    int dy = to.y - from.y;
    return {dx == 0 ? 0 : (dx > 0 ? 1 : -1), dy == 0 ? 0 : (dy > 0 ? 1 : -1)};
}

bool axis_parallel_step(const Point2& from, const Point2& to) {
    return (from.x == to.x) != (from.y == to.y);
}

// Drops an explicit closing point, validates steps, and removes corners
// where the walk does not actually turn.
std::vector<Point2> normalize_component(std::vector<Point2> corners) {
    if (corners.size() >= 2 && corners.front() == corners.back())
        corners.pop_back();
    if (corners.size() < 2)
        throw Error(ErrorCode::OpenComponent,
                    "component has too few corners to form a closed curve");

    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
        if (!axis_parallel_step(corners[i], corners[i + 1]))
            throw Error(ErrorCode::NonUnitOrDiagonalStep,
                        "step " + to_string(corners[i]) + " -> " +
                            to_string(corners[i + 1]) +
                            " must change exactly one coordinate",
                        corners[i]);
    }
    if (!axis_parallel_step(corners.back(), corners.front()))
        throw Error(ErrorCode::OpenComponent,
                    "component endpoints " + to_string(corners.back()) + " and " +
                        to_string(corners.front()) +
                        " cannot be joined by one axis-parallel run",
                    corners.back());

    std::vector<Point2> merged;
    const std::size_t n = corners.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& prev = corners[(i + n - 1) % n];
        const Point2& next = corners[(i + 1) % n];
        if (step_direction(prev, corners[i]) != step_direction(corners[i], next))
            merged.push_back(corners[i]);
    }
    if (merged.size() < 2)
        throw Error(ErrorCode::OpenComponent, "component degenerates to a segment");
    return merged;
}

struct Overlay {
    std::vector<std::vector<Point2>> components;  // normalized corner cycles
    std::map<Edge2, int> edge_multiplicity;
    std::map<Point2, int> degree;  // edge incidences, with multiplicity
    std::set<Point2> corner_points;
};

// Shared structural validation: everything except the crossing-type map.
Overlay validate_structure(std::vector<std::vector<Point2>> components) {
    Overlay ov;
    ov.components.reserve(components.size());
    for (auto& comp : components)
        ov.components.push_back(normalize_component(std::move(comp)));

    for (const auto& comp : ov.components) {
        for (const Point2& c : comp)
            ov.corner_points.insert(c);
        std::vector<Point2> walk = expand_cycle(comp);
        for (std::size_t i = 0; i < walk.size(); ++i) {
            Edge2 e(walk[i], walk[(i + 1) % walk.size()]);
            ov.edge_multiplicity[e] += 1;
            ov.degree[e.a] += 1;
            ov.degree[e.b] += 1;
        }
    }

    for (const auto& [v, deg] : ov.degree) {
        if (deg > 4)
            throw Error(ErrorCode::VertexDegreeExceeds4,
                        "vertex " + to_string(v) + " has degree " + std::to_string(deg),
                        v);
    }
    for (const auto& [e, mult] : ov.edge_multiplicity) {
        if (mult > 1)
            throw Error(ErrorCode::EdgeReused,
                        "edge " + to_string(e) + " is traversed " +
                            std::to_string(mult) + " times",
                        e.a);
    }
    // A degree-4 vertex now has all four incident unit edges exactly once.
    // The crossing is transversal iff neither traversal turns there, i.e.
    // the vertex is not a corner of any component walk.
    for (const auto& [v, deg] : ov.degree) {
        if (deg == 4 && ov.corner_points.count(v))
            throw Error(ErrorCode::TangentialCrossing,
                        "two strands touch tangentially at " + to_string(v), v);
    }
    return ov;
}

}  // namespace

std::vector<Point2> expand_cycle(const std::vector<Point2>& corners) {
    std::vector<Point2> walk;
    const std::size_t n = corners.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point2 cur = corners[i];
        const Point2& next = corners[(i + 1) % n];
        Point2 dir = step_direction(cur, next);
        while (cur != next) {
            walk.push_back(cur);
            cur = cur + dir;
        }
    }
    return walk;
}

std::vector<Point2> canonical_cycle(std::vector<Point2> corners) {
    const std::size_t n = corners.size();
    std::vector<Point2> best;
    std::vector<Point2> candidate(n);
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t start = 0; start < n; ++start) {
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t idx = dir == 0 ? (start + k) % n : (start + 2 * n - k) % n;
                candidate[k] = corners[idx];
            }
            if (best.empty() || candidate < best)
                best = candidate;
        }
    }
    return best;
}

Diagram Diagram::build(std::vector<std::vector<Point2>> components,
                       std::map<Point2, CrossingType> crossings) {
    Overlay ov = validate_structure(std::move(components));

    for (const auto& [v, deg] : ov.degree) {
        if (deg == 4 && crossings.count(v) == 0)
            throw Error(ErrorCode::UndeclaredCrossing,
                        "degree-4 vertex " + to_string(v) + " has no crossing type", v);
    }
    for (const auto& [p, type] : crossings) {
        (void)type;
        auto it = ov.degree.find(p);
        if (it == ov.degree.end() || it->second != 4)
            throw Error(ErrorCode::TypeDeclaredAtNonCrossing,
                        "crossing type declared at " + to_string(p) +
                            " which is not a degree-4 vertex",
                        p);
    }

    Diagram d;
    d.crossings_ = std::move(crossings);
    for (const auto& [e, mult] : ov.edge_multiplicity) {
        (void)mult;
        d.edges_.insert(e);
    }
    d.components_.reserve(ov.components.size());
    for (auto& comp : ov.components)
        d.components_.push_back(canonical_cycle(std::move(comp)));
    std::sort(d.components_.begin(), d.components_.end());
    return d;
}

CrossingType Diagram::crossing_type(const Point2& p) const {
    auto it = crossings_.find(p);
    if (it == crossings_.end())
        throw Error(ErrorCode::NotACrossing, to_string(p) + " is not a crossing", p);
    return it->second;
}

std::vector<Point2> detect_crossings(const std::vector<std::vector<Point2>>& components) {
    Overlay ov = validate_structure(components);
    std::vector<Point2> found;
    for (const auto& [v, deg] : ov.degree)
        if (deg == 4)
            found.push_back(v);
    return found;
}

Strand strand_at(const Diagram& d, const Point2& c, Axis axis) {
    if (!d.is_crossing(c))
        throw Error(ErrorCode::NotACrossing, to_string(c) + " is not a crossing", c);
    Edge2 lo(c - unit_step(axis, 1), c);
    Edge2 hi(c, c + unit_step(axis, 1));
    return {lo, hi};
}

std::pair<Strand, Strand> strands_at(const Diagram& d, const Point2& c) {
    return {strand_at(d, c, Axis::X), strand_at(d, c, Axis::Y)};
}

}  // namespace latk
