#include "latk/validate.hpp"

#include <algorithm>
#include <map>

namespace latk {

namespace {

// One pass of a component walk through a planar vertex: the z-interval it
// occupies there and the axes of the planar edges on either side.
struct Visit {
    IntInterval stick;
    Axis in;
    Axis out;

    bool straight() const { return in == out; }
};

struct ProjectionAnalysis {
    std::map<Edge2, std::vector<int>> edge_heights;
    std::map<Point2, std::vector<Visit>> visits;
    std::vector<std::vector<Point2>> planar_components;  // corner cycles
    std::vector<std::string> problems;
};

void note(ProjectionAnalysis& pa, const std::string& msg) {
    pa.problems.push_back(msg);
}

ProjectionAnalysis analyze(const Link3& k) {
    ProjectionAnalysis pa;
    for (const auto& corners : k.components()) {
        // Expand planar segments into unit steps, keep z-segments whole.
        struct Item {
            bool planar;
            Point2 from, to;  // planar step
            Axis axis;
            int z;                // planar: height; vertical: unused
            Point2 at;            // vertical: position
            int z_from, z_to;     // vertical: endpoints
        };
        std::vector<Item> items;
        const std::size_t n = corners.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point3& a = corners[i];
            const Point3& b = corners[(i + 1) % n];
            if (segment_axis(a, b) == Axis3::Z) {
                items.push_back({false, {}, {}, Axis::X, 0, a.xy(), a.z, b.z});
                continue;
            }
            const Axis axis = a.x != b.x ? Axis::X : Axis::Y;
            Point2 cur = a.xy();
            const Point2 end = b.xy();
            const Point2 dir = axis == Axis::X ? Point2{b.x > a.x ? 1 : -1, 0}
                                               : Point2{0, b.y > a.y ? 1 : -1};
            while (cur != end) {
                items.push_back({true, cur, cur + dir, axis, a.z, {}, 0, 0});
                cur = cur + dir;
            }
        }

        std::vector<Point2> walk;  // planar positions, one per planar step
        const std::size_t m = items.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Item& it = items[i];
            if (!it.planar)
                continue;
            pa.edge_heights[Edge2(it.from, it.to)].push_back(it.z);
            walk.push_back(it.from);

            // visit at it.to: either straight into the next planar step or
            // through one vertical segment (canonical form forbids two).
            const Item& next = items[(i + 1) % m];
            if (next.planar) {
                pa.visits[it.to].push_back(
                    {{it.z, it.z}, it.axis, next.axis});
            } else {
                const Item& after = items[(i + 2) % m];
                if (!after.planar) {
                    note(pa, "consecutive vertical segments over " +
                                 to_string(next.at));
                    continue;
                }
                pa.visits[it.to].push_back(
                    {{std::min(next.z_from, next.z_to),
                      std::max(next.z_from, next.z_to)},
                     it.axis, after.axis});
            }
        }

        // Corner cycle of the projected walk.
        std::vector<Point2> proj_corners;
        const std::size_t w = walk.size();
        for (std::size_t i = 0; i < w; ++i) {
            const Point2 din = walk[i] - walk[(i + w - 1) % w];
            const Point2 dout = walk[(i + 1) % w] - walk[i];
            if (din != dout)
                proj_corners.push_back(walk[i]);
        }
        pa.planar_components.push_back(std::move(proj_corners));
    }

    for (const auto& [e, zs] : pa.edge_heights) {
        if (zs.size() > 1)
            note(pa, "several segments project onto edge " + to_string(e));
    }
    for (const auto& [v, vis] : pa.visits) {
        if (vis.size() == 1)
            continue;  // one z-stick, possibly trivial: always proper
        if (vis.size() > 2) {
            note(pa, std::to_string(vis.size()) + " strands meet over " + to_string(v));
            continue;
        }
        const Visit& a = vis[0];
        const Visit& b = vis[1];
        if (!a.straight() || !b.straight()) {
            note(pa, "a z-stick over crossing " + to_string(v) +
                         " meets both x- and y-edges");
            continue;
        }
        if (a.in == b.in) {
            note(pa, "both strands over " + to_string(v) + " run along the same axis");
            continue;
        }
        if (!a.stick.disjoint(b.stick))
            note(pa, "z-sticks over crossing " + to_string(v) + " interleave");
    }
    return pa;
}

std::map<Point2, CrossingType> recover_crossings(const ProjectionAnalysis& pa) {
    std::map<Point2, CrossingType> out;
    for (const auto& [v, vis] : pa.visits) {
        if (vis.size() != 2)
            continue;
        const Visit& first = vis[0];
        const Visit& second = vis[1];
        const Visit& x_visit = first.in == Axis::X ? first : second;
        const Visit& y_visit = first.in == Axis::X ? second : first;
        out[v] = x_visit.stick.lo > y_visit.stick.hi ? CrossingType::XOver
                                                     : CrossingType::YOver;
    }
    return out;
}

}  // namespace

Diagram project(const Link3& k) {
    ProjectionAnalysis pa = analyze(k);
    if (!pa.problems.empty())
        throw Error(ErrorCode::NonProperProjection, pa.problems.front());
    try {
        return Diagram::build(pa.planar_components, recover_crossings(pa));
    } catch (const Error& e) {
        throw Error(ErrorCode::NonProperProjection,
                    std::string("projection is not a lattice diagram: ") + e.what());
    }
}

ProperReport check_proper(const Link3& k) {
    return {analyze(k).problems};
}

HeightAssignment induced_heights(const Link3& k) {
    ProjectionAnalysis pa = analyze(k);
    HeightAssignment h;
    for (const auto& [e, zs] : pa.edge_heights)
        h.set_height(e, zs.front());
    return h;
}

namespace {

struct Box {
    Point3 lo, hi;
};

Box segment_box(const Point3& a, const Point3& b) {
    return {{std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)},
            {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)}};
}

bool intersect(const Box& s, const Box& t, Box& out) {
    out.lo = {std::max(s.lo.x, t.lo.x), std::max(s.lo.y, t.lo.y),
              std::max(s.lo.z, t.lo.z)};
    out.hi = {std::min(s.hi.x, t.hi.x), std::min(s.hi.y, t.hi.y),
              std::min(s.hi.z, t.hi.z)};
    return out.lo.x <= out.hi.x && out.lo.y <= out.hi.y && out.lo.z <= out.hi.z;
}

}  // namespace

bool check_embedding(const Link3& k) {
    struct Seg {
        Box box;
        int component;
        std::size_t index;
        Point3 a, b;
    };
    std::vector<Seg> segs;
    std::vector<std::size_t> comp_sizes;
    for (std::size_t c = 0; c < k.components().size(); ++c) {
        const auto& corners = k.components()[c];
        comp_sizes.push_back(corners.size());
        for (std::size_t i = 0; i < corners.size(); ++i) {
            const Point3& a = corners[i];
            const Point3& b = corners[(i + 1) % corners.size()];
            segs.push_back({segment_box(a, b), int(c), i, a, b});
        }
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            Box overlap;
            if (!intersect(segs[i].box, segs[j].box, overlap))
                continue;
            if (segs[i].component != segs[j].component)
                return false;
            const std::size_t n = comp_sizes[segs[i].component];
            const std::size_t a = segs[i].index;
            const std::size_t b = segs[j].index;
            const bool adjacent = (a + 1) % n == b || (b + 1) % n == a;
            if (!adjacent)
                return false;
            // consecutive segments may share exactly their common corner
            if (overlap.lo != overlap.hi)
                return false;
            const Point3 shared = (a + 1) % n == b ? segs[j].a : segs[i].a;
            if (overlap.lo != shared)
                return false;
        }
    }
    return true;
}

ValidationReport full_validate(const Diagram& d, const Link3& k) {
    ValidationReport report;

    const ProperReport proper = check_proper(k);
    report.proper = proper.ok();
    for (const std::string& v : proper.violations)
        report.details.push_back("proper: " + v);

    if (report.proper) {
        try {
            report.projection_matches = project(k) == d;
            if (!report.projection_matches)
                report.details.push_back("projection: does not match the diagram");
        } catch (const Error& e) {
            report.details.push_back(std::string("projection: ") + e.what());
        }
    } else {
        report.details.push_back("projection: skipped, link is not proper");
    }

    report.embedded = check_embedding(k);
    if (!report.embedded)
        report.details.push_back("embedding: segments intersect");

    const HeightAssignment h = induced_heights(k);
    report.all_resolved = true;
    for (const auto& [c, type] : d.crossings()) {
        (void)type;
        if (!is_resolved(h, d, c)) {
            report.all_resolved = false;
            report.details.push_back("resolved: crossing " + to_string(c) +
                                     " is not resolved");
        }
    }
    return report;
}

}  // namespace latk
