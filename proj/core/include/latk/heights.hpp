#pragma once

#include "latk/diagram.hpp"
#include "latk/link3.hpp"

namespace latk {

struct IntInterval {
    int lo = 0;
    int hi = 0;

    bool disjoint(const IntInterval& o) const { return hi < o.lo || o.hi < lo; }
    friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// z-sticks over a crossing: min/max of the two x-edge heights and of the
/// two y-edge heights.  Degenerate intervals are trivial sticks.
struct ZStickPair {
    IntInterval x_stick;
    IntInterval y_stick;
};

/// Integer z-height per diagram edge; edges absent from the map sit at 0.
/// Together with the diagram this encodes a lattice pre-image: each planar
/// edge placed at its height, consecutive edges joined by vertical sticks.
class HeightAssignment {
public:
    int height(const Edge2& e) const {
        auto it = h_.find(e);
        return it == h_.end() ? 0 : it->second;
    }
    void set_height(const Edge2& e, int z) {
        if (z == 0)
            h_.erase(e);
        else
            h_[e] = z;
    }
    const std::map<Edge2, int>& nonzero() const { return h_; }

    /// Largest |height| present.
    int max_abs() const;

    bool operator==(const HeightAssignment&) const = default;

private:
    std::map<Edge2, int> h_;
};

/// Throws NotACrossing.
ZStickPair z_sticks_at(const HeightAssignment& h, const Diagram& d, const Point2& v);

/// A crossing is resolved when its two sticks are disjoint and ordered by
/// its type: the over-strand's stick lies strictly above the other.
bool is_resolved(const HeightAssignment& h, const Diagram& d, const Point2& v);

/// Move one strand of a crossing to a fixed z-value.
struct LiftSpec {
    Point2 crossing;
    Axis axis;
    int height = 0;

    friend bool operator==(const LiftSpec&, const LiftSpec&) = default;
};

/// Returns a copy of h with the two edges of the lifted strand at
/// spec.height; the vertical sticks are implicit in the representation.
HeightAssignment apply_lift(const HeightAssignment& h, const Diagram& d,
                            const LiftSpec& spec);

/// False iff the transition turned w from resolved into not resolved.
bool is_compatible(const HeightAssignment& before, const HeightAssignment& after,
                   const Diagram& d, const Point2& w);

/// Realizes the pre-image as closed 3D polylines: walks every component,
/// emits corners where the direction or the height changes, and joins
/// height changes with vertical segments.
Link3 assemble_link3(const Diagram& d, const HeightAssignment& h);

/// Smallest and largest height over all diagram edges (absent edges count
/// as 0); {0,0} for a diagram with no edges.
std::pair<int, int> height_range(const Diagram& d, const HeightAssignment& h);

}  // namespace latk
