#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "latk/error.hpp"
#include "latk/geometry.hpp"

namespace latk {

/// Over-strand direction at a transversal lattice crossing.  XOver means the
/// horizontal strand passes above the vertical one.
enum class CrossingType { XOver, YOver };

inline CrossingType opposite(CrossingType t) {
    return t == CrossingType::XOver ? CrossingType::YOver : CrossingType::XOver;
}

inline Axis over_axis(CrossingType t) {
    return t == CrossingType::XOver ? Axis::X : Axis::Y;
}

inline char crossing_letter(CrossingType t) {
    return t == CrossingType::XOver ? 'X' : 'Y';
}

/// Closed rectilinear curves in the planar lattice together with an
/// over/under type for every degree-4 vertex.  Immutable after construction;
/// every accepted Diagram satisfies:
///   - each component is a closed cycle of corner points, consecutive corners
///     joined by axis-parallel runs, stored in canonical rotation/orientation
///   - every lattice vertex of the union has degree 2 or 4
///   - degree-4 vertices are transversal (both traversals pass straight
///     through) and appear in the crossing map; no vertex of degree 2 does
///   - no unit edge is used twice
class Diagram {
public:
    /// Validates and canonicalizes.  `components` hold corner points of
    /// closed polylines (a repeated first point at the end is tolerated).
    /// Throws Error with one of the construction ErrorCodes on violation.
    static Diagram build(std::vector<std::vector<Point2>> components,
                         std::map<Point2, CrossingType> crossings);

    const std::vector<std::vector<Point2>>& components() const { return components_; }
    const std::map<Point2, CrossingType>& crossings() const { return crossings_; }
    const std::set<Edge2>& edges() const { return edges_; }

    bool is_crossing(const Point2& p) const { return crossings_.count(p) != 0; }
    CrossingType crossing_type(const Point2& p) const;

    std::size_t crossing_count() const { return crossings_.size(); }

    bool operator==(const Diagram& other) const = default;

private:
    Diagram() = default;

    std::vector<std::vector<Point2>> components_;  // canonical corner cycles
    std::map<Point2, CrossingType> crossings_;
    std::set<Edge2> edges_;
};

/// The two unit edges of a strand through a crossing.
using Strand = std::pair<Edge2, Edge2>;

/// x-strand and y-strand at a crossing: the pairs of collinear unit edges
/// meeting there.  Throws NotACrossing.
std::pair<Strand, Strand> strands_at(const Diagram& d, const Point2& c);

/// The two unit edges of the given axis at a crossing, as a strand.
Strand strand_at(const Diagram& d, const Point2& c, Axis axis);

/// Expands a corner cycle into the full cyclic vertex walk (unit steps);
/// the first corner is walk[0] and the walk implicitly closes.
std::vector<Point2> expand_cycle(const std::vector<Point2>& corners);

/// Degree-4 vertices of a component overlay that build() would accept as
/// crossings.  Runs the full structural validation except for the crossing
/// map checks; used by the generator to assign types before building.
std::vector<Point2> detect_crossings(const std::vector<std::vector<Point2>>& components);

/// Canonical form of one corner cycle: lexicographically smallest sequence
/// over all rotations and both orientations.
std::vector<Point2> canonical_cycle(std::vector<Point2> corners);

}  // namespace latk
