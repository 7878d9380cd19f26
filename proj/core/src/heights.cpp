#include "latk/heights.hpp"

#include <algorithm>

namespace latk {

int HeightAssignment::max_abs() const {
    int m = 0;
    for (const auto& [e, z] : h_) {
        (void)e;
        m = std::max(m, std::abs(z));
    }
    return m;
}

ZStickPair z_sticks_at(const HeightAssignment& h, const Diagram& d, const Point2& v) {
    auto [xs, ys] = strands_at(d, v);
    auto stick = [&](const Strand& s) {
        int a = h.height(s.first);
        int b = h.height(s.second);
        return IntInterval{std::min(a, b), std::max(a, b)};
    };
    return {stick(xs), stick(ys)};
}

bool is_resolved(const HeightAssignment& h, const Diagram& d, const Point2& v) {
    const ZStickPair s = z_sticks_at(h, d, v);
    if (!s.x_stick.disjoint(s.y_stick))
        return false;
    return d.crossing_type(v) == CrossingType::XOver ? s.x_stick.lo > s.y_stick.hi
                                                     : s.x_stick.hi < s.y_stick.lo;
}

HeightAssignment apply_lift(const HeightAssignment& h, const Diagram& d,
                            const LiftSpec& spec) {
    const Strand s = strand_at(d, spec.crossing, spec.axis);
    HeightAssignment out = h;
    out.set_height(s.first, spec.height);
    out.set_height(s.second, spec.height);
    return out;
}

bool is_compatible(const HeightAssignment& before, const HeightAssignment& after,
                   const Diagram& d, const Point2& w) {
    return !(is_resolved(before, d, w) && !is_resolved(after, d, w));
}

Link3 assemble_link3(const Diagram& d, const HeightAssignment& h) {
    std::vector<std::vector<Point3>> components;
    components.reserve(d.components().size());
    for (const auto& corners : d.components()) {
        const std::vector<Point2> walk = expand_cycle(corners);
        const std::size_t m = walk.size();
        std::vector<Point3> pts;
        pts.reserve(2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            const Point2& v = walk[i];
            const int z_in = h.height(Edge2(walk[(i + m - 1) % m], v));
            const int z_out = h.height(Edge2(v, walk[(i + 1) % m]));
            pts.push_back({v.x, v.y, z_in});
            if (z_out != z_in)
                pts.push_back({v.x, v.y, z_out});
        }
        components.push_back(std::move(pts));
    }
    // Link3::build merges the collinear interior vertices of straight runs.
    return Link3::build(std::move(components));
}

std::pair<int, int> height_range(const Diagram& d, const HeightAssignment& h) {
    int lo = 0, hi = 0;
    for (const Edge2& e : d.edges()) {
        const int z = h.height(e);
        lo = std::min(lo, z);
        hi = std::max(hi, z);
    }
    return {lo, hi};
}

}  // namespace latk
