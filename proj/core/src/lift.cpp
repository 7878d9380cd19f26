#include "latk/lift.hpp"

#include <algorithm>

namespace latk {

namespace {

Axis segment_axis2(const Point2& a, const Point2& b) {
    return a.y == b.y ? Axis::X : Axis::Y;
}

}  // namespace

LiftSpec choose_proper_lift(const HeightAssignment& h, const Diagram& d,
                            const Point2& v, std::optional<Axis> forbidden_axis,
                            int next_magnitude) {
    const Axis over = over_axis(d.crossing_type(v));
    Axis axis = over;
    if (forbidden_axis && *forbidden_axis == over)
        axis = perpendicular(over);
    const int p = axis == over ? next_magnitude : -next_magnitude;
    const LiftSpec spec{v, axis, p};
    if (!is_resolved(apply_lift(h, d, spec), d, v))
        throw Error(ErrorCode::NoProperAxis,
                    "lift at " + to_string(v) + " does not resolve the crossing; "
                    "magnitude " + std::to_string(next_magnitude) + " is not fresh",
                    v);
    return spec;
}

LiftResult lift_diagram(const Diagram& d, const LiftOptions& options) {
    LiftResult result;
    result.celtic = find_celtic(d);
    if (result.celtic)
        return result;

    HeightAssignment h;
    int magnitude = 1;
    std::set<Point2> lifted;

    auto perform = [&](const LiftSpec& spec) {
        HeightAssignment next = apply_lift(h, d, spec);
        if (options.verify_backwards_compat) {
            for (const auto& [w, type] : d.crossings()) {
                (void)type;
                if (w != spec.crossing && !is_compatible(h, next, d, w))
                    throw Error(ErrorCode::InternalScheduleError,
                                "lift at " + to_string(spec.crossing) +
                                    " unresolved previously resolved crossing " +
                                    to_string(w),
                                w);
            }
        }
        h = std::move(next);
        result.trace.push_back(spec);
        lifted.insert(spec.crossing);
        ++magnitude;
    };

    // Problem crossings first, one problem crossing graph component at a
    // time; each lift is perpendicular to the component edge just walked.
    const ProblemCrossingGraph pcg = problem_crossing_graph(d);
    for (const PcgComponent& comp : pcg_components(pcg)) {
        if (comp.kind == PcgKind::IsolatedVertex) {
            perform(choose_proper_lift(h, d, comp.vertices[0], std::nullopt, magnitude));
            continue;
        }
        const auto& vs = comp.vertices;
        perform(choose_proper_lift(h, d, vs[0], segment_axis2(vs[0], vs[1]), magnitude));
        for (std::size_t i = 1; i < vs.size(); ++i)
            perform(choose_proper_lift(h, d, vs[i], segment_axis2(vs[i - 1], vs[i]),
                                       magnitude));
    }

    // Remaining crossings: lift the strand through an opposing-neighbor pair
    // whose members are non-crossings or share the crossing's type.  Such a
    // pair exists precisely because these crossings are not problem
    // crossings.
    for (const auto& [vertex, vertex_type] : d.crossings()) {
        const Point2 v = vertex;
        const CrossingType type = vertex_type;
        if (lifted.count(v))
            continue;
        auto qualifies = [&](Axis axis, int& crossing_members) {
            crossing_members = 0;
            for (int sign : {-1, 1}) {
                const Point2 n = v + unit_step(axis, sign);
                if (!d.is_crossing(n))
                    continue;
                if (d.crossing_type(n) != type)
                    return false;
                ++crossing_members;
            }
            return true;
        };
        int x_members = 0, y_members = 0;
        const bool x_ok = qualifies(Axis::X, x_members);
        const bool y_ok = qualifies(Axis::Y, y_members);
        std::optional<Axis> axis;
        if (x_ok && x_members == 0)
            axis = Axis::X;
        else if (y_ok && y_members == 0)
            axis = Axis::Y;
        else if (x_ok)
            axis = Axis::X;
        else if (y_ok)
            axis = Axis::Y;
        if (!axis)
            throw Error(ErrorCode::InternalScheduleError,
                        "no opposing-neighbor pair qualifies at " + to_string(v) +
                            "; crossing should have been a problem crossing",
                        v);
        perform(choose_proper_lift(h, d, v, perpendicular(*axis), magnitude));
    }

    for (const auto& [v, type] : d.crossings()) {
        (void)type;
        if (!is_resolved(h, d, v))
            throw Error(ErrorCode::InternalScheduleError,
                        "crossing " + to_string(v) + " left unresolved", v);
    }

    result.heights = h;
    result.link = assemble_link3(d, h);
    return result;
}

}  // namespace latk
