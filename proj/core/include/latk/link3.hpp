#pragma once

#include <vector>

#include "latk/error.hpp"
#include "latk/geometry.hpp"

namespace latk {

enum class Axis3 { X, Y, Z };

/// Closed axis-parallel polylines in the spatial integer lattice, stored as
/// corner points in canonical rotation/orientation.  Invariants: components
/// closed, consecutive segments axis-parallel and never collinear, no
/// zero-length segments.
class Link3 {
public:
    /// Validates, merges collinear same-direction runs, canonicalizes.
    /// Throws NonAxisParallelStep, OpenComponent, or CollinearCorners.
    static Link3 build(std::vector<std::vector<Point3>> components);

    const std::vector<std::vector<Point3>>& components() const { return components_; }

    std::size_t corner_count() const;
    /// Smallest and largest z coordinate over all corners.
    std::pair<int, int> z_range() const;

    bool operator==(const Link3&) const = default;

private:
    Link3() = default;
    std::vector<std::vector<Point3>> components_;
};

/// Axis of the segment a-b; requires the points to differ in exactly one
/// coordinate (throws NonAxisParallelStep otherwise).
Axis3 segment_axis(const Point3& a, const Point3& b);

}  // namespace latk
