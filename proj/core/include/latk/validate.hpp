#pragma once

#include <string>
#include <vector>

#include "latk/diagram.hpp"
#include "latk/heights.hpp"
#include "latk/link3.hpp"

namespace latk {

/// Orthogonal projection onto the xy-plane.  Succeeds only when the link is
/// a proper pre-image of some lattice diagram: singleton inverse images away
/// from vertices, one z-stick over plain vertices, and two axis-pure
/// disjoint z-sticks over crossings.  Crossing types are read off the stick
/// order (higher strand is the over-strand).  Throws NonProperProjection.
Diagram project(const Link3& k);

struct ProperReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Non-throwing form of the properness checks behind project().
ProperReport check_proper(const Link3& k);

/// True iff the maximal segments pairwise intersect only in shared corners
/// of consecutive segments.  Exact integer arithmetic throughout.
bool check_embedding(const Link3& k);

/// Heights of the planar unit edges under k's segments (first hit wins when
/// the projection is improper; callers should gate on check_proper).
HeightAssignment induced_heights(const Link3& k);

struct ValidationReport {
    bool projection_matches = false;
    bool proper = false;
    bool embedded = false;
    bool all_resolved = false;
    std::vector<std::string> details;

    bool ok() const {
        return projection_matches && proper && embedded && all_resolved;
    }
};

/// The full soundness gate: k projects onto exactly d (components unordered,
/// traversal orientation free), is proper, is embedded, and every crossing
/// of d is resolved under the induced heights.
ValidationReport full_validate(const Diagram& d, const Link3& k);

}  // namespace latk
