#pragma once

#include <vector>

#include "latk/diagram.hpp"
#include "latk/heights.hpp"
#include "latk/link3.hpp"

namespace latk {

/// Strict-inequality digraph over crossing-incident diagram edges: an arc
/// (above, below) requires height(above) > height(below).  Each crossing
/// contributes four arcs, one per (over-strand edge, under-strand edge)
/// pair.  The diagram lifts iff this digraph is acyclic.
struct HeightConstraintGraph {
    std::vector<Edge2> nodes;                  // sorted
    std::vector<std::pair<int, int>> arcs;     // (above, below) node indices
    std::vector<std::vector<int>> successors;  // successors[i]: nodes below i

    int node_index(const Edge2& e) const;
};

HeightConstraintGraph constraint_digraph(const Diagram& d);

struct OracleDecision {
    bool liftable = false;
    /// On infeasibility, one directed cycle e0 > e1 > ... > e0.
    std::vector<Edge2> cycle;
};

OracleDecision oracle_liftable(const Diagram& d);

/// Longest-path layering of the acyclic constraint digraph: sinks at 0,
/// every other node one above its highest successor.  Unconstrained edges
/// stay at 0.  Throws NotLiftable.
HeightAssignment oracle_heights(const Diagram& d);

/// Assembles the layered heights into a proper lattice stick knot/link.
/// The z-extent of the result is minimal over all valid integer height
/// assignments.  Throws NotLiftable.
Link3 oracle_lift(const Diagram& d);

}  // namespace latk
