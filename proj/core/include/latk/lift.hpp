#pragma once

#include <optional>

#include "latk/analysis.hpp"
#include "latk/heights.hpp"
#include "latk/link3.hpp"

namespace latk {

struct LiftOptions {
    /// Debug mode: re-check every crossing after each lift and throw
    /// InternalScheduleError if a resolved one became unresolved.
    bool verify_backwards_compat = false;
};

struct LiftResult {
    /// Set when the diagram contains a Celtic configuration; no lift exists.
    std::optional<CelticWitness> celtic;
    /// Set on success.
    std::optional<Link3> link;
    /// Final edge heights (empty when celtic is set).
    HeightAssignment heights;
    /// One entry per performed lift, in execution order.
    std::vector<LiftSpec> trace;

    bool lifted() const { return link.has_value(); }
};

/// Picks the lift that resolves v using magnitude |p| = next_magnitude:
/// the over-strand goes to +next_magnitude, the under-strand to
/// -next_magnitude.  With no forbidden axis the over-strand's axis is used.
/// next_magnitude must exceed every |height| in h; throws NoProperAxis if
/// the chosen lift fails to resolve v.
LiftSpec choose_proper_lift(const HeightAssignment& h, const Diagram& d,
                            const Point2& v, std::optional<Axis> forbidden_axis,
                            int next_magnitude);

/// Decides liftability and constructs a witness either way: a Celtic
/// configuration, or a proper lattice stick knot/link projecting onto d.
/// Lifts one crossing at a time with strictly increasing fresh magnitudes:
/// first the components of the problem crossing graph (isolated vertices
/// freely; arcs and cycles perpendicular to the previous member), then the
/// remaining crossings through an opposing-neighbor pair of same-type or
/// non-crossing members.
LiftResult lift_diagram(const Diagram& d, const LiftOptions& options = {});

}  // namespace latk
