#include "latk/link3.hpp"

#include <algorithm>

namespace latk {

Axis3 segment_axis(const Point3& a, const Point3& b) {
    const int changed = int(a.x != b.x) + int(a.y != b.y) + int(a.z != b.z);
    if (changed != 1)
        throw Error(ErrorCode::NonAxisParallelStep,
                    "step " + to_string(a) + " -> " + to_string(b) +
                        " must change exactly one coordinate");
    if (a.x != b.x)
        return Axis3::X;
    return a.y != b.y ? Axis3::Y : Axis3::Z;
}

namespace {

Point3 step_sign(const Point3& from, const Point3& to) {
    auto sgn = [](int d) { return d == 0 ? 0 : (d > 0 ? 1 : -1); };
    return {sgn(to.x - from.x), sgn(to.y - from.y), sgn(to.z - from.z)};
}

std::vector<Point3> normalize_component(std::vector<Point3> corners) {
    if (corners.size() >= 2 && corners.front() == corners.back())
        corners.pop_back();
    if (corners.size() < 2)
        throw Error(ErrorCode::OpenComponent,
                    "component has too few corners to form a closed curve");

    for (std::size_t i = 0; i + 1 < corners.size(); ++i)
        segment_axis(corners[i], corners[i + 1]);
    {
        const int changed = int(corners.back().x != corners.front().x) +
                            int(corners.back().y != corners.front().y) +
                            int(corners.back().z != corners.front().z);
        if (changed != 1)
            throw Error(ErrorCode::OpenComponent,
                        "component endpoints " + to_string(corners.back()) + " and " +
                            to_string(corners.front()) +
                            " cannot be joined by one axis-parallel segment");
    }

    std::vector<Point3> merged;
    const std::size_t n = corners.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point3 din = step_sign(corners[(i + n - 1) % n], corners[i]);
        const Point3 dout = step_sign(corners[i], corners[(i + 1) % n]);
        if (din == dout)
            continue;  // interior point of a straight run
        if (din == Point3{-dout.x, -dout.y, -dout.z})
            throw Error(ErrorCode::CollinearCorners,
                        "segments reverse onto each other at " + to_string(corners[i]));
        merged.push_back(corners[i]);
    }
    if (merged.size() < 4)
        throw Error(ErrorCode::OpenComponent, "component degenerates to a segment");
    return merged;
}

std::vector<Point3> canonical_cycle3(const std::vector<Point3>& corners) {
    const std::size_t n = corners.size();
    std::vector<Point3> best;
    std::vector<Point3> candidate(n);
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

}  // namespace

Link3 Link3::build(std::vector<std::vector<Point3>> components) {
    Link3 k;
    k.components_.reserve(components.size());
    for (auto& comp : components)
        k.components_.push_back(canonical_cycle3(normalize_component(std::move(comp))));
    std::sort(k.components_.begin(), k.components_.end());
    return k;
}

std::size_t Link3::corner_count() const {
    std::size_t n = 0;
    for (const auto& comp : components_)
        n += comp.size();
    return n;
}

std::pair<int, int> Link3::z_range() const {
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& comp : components_) {
        for (const Point3& p : comp) {
            if (first) {
                lo = hi = p.z;
                first = false;
            } else {
                lo = std::min(lo, p.z);
                hi = std::max(hi, p.z);
            }
        }
    }
    return {lo, hi};
}

}  // namespace latk
