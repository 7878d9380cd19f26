#pragma once

#include <array>
#include <optional>

#include "latk/diagram.hpp"

namespace latk {

/// Undirected graph on lattice points with sorted adjacency lists.
struct LatticeGraph {
    std::map<Point2, std::vector<Point2>> adj;

    bool has_vertex(const Point2& v) const { return adj.count(v) != 0; }
    bool has_edge(const Point2& u, const Point2& v) const;
    std::size_t degree(const Point2& v) const;
    void add_vertex(const Point2& v) { adj[v]; }
    void add_edge(const Point2& u, const Point2& v);
    /// Edges with endpoints in canonical order, sorted.
    std::vector<std::pair<Point2, Point2>> edges() const;
    std::size_t vertex_count() const { return adj.size(); }
    std::size_t edge_count() const;
};

/// Is v adjacent to exactly two vertices whose edges at v are perpendicular?
bool is_corner_of(const LatticeGraph& g, const Point2& v);

/// Vertices at the diagram's crossings, edges between crossings at lattice
/// distance 1.
struct CrossingGraph {
    LatticeGraph graph;
};

CrossingGraph crossing_graph(const Diagram& d);

/// Nearby-neighbor pairs at a crossing that certify it as a problem crossing.
struct BadNeighborReport {
    /// Perpendicular pairs of crossings adjacent to c, both of the type
    /// opposite to c's; each pair in canonical order, pairs sorted.
    std::vector<std::pair<Point2, Point2>> pairs;
    /// Sorted union of all pair members: the bad neighbors of c.
    std::vector<Point2> bad_neighbors;

    bool problem() const { return !pairs.empty(); }
};

BadNeighborReport bad_neighbor_pairs(const Diagram& d, const CrossingGraph& cg,
                                     const Point2& c);

/// Subgraph of the crossing graph on problem crossings, with an edge where
/// two problem crossings are bad neighbors of each other.
struct ProblemCrossingGraph {
    LatticeGraph graph;
};

ProblemCrossingGraph problem_crossing_graph(const Diagram& d);

/// Four crossings on a unit square whose types alternate; certifies that the
/// diagram is not the projection of any proper lattice stick knot or link.
struct CelticWitness {
    /// Square corners counterclockwise from the lexicographically smallest.
    std::array<Point2, 4> corners;
    std::array<CrossingType, 4> types;
};

/// Scans unit squares of crossings; returns the witness whose smallest corner
/// is lexicographically minimal, if any square qualifies.
std::optional<CelticWitness> find_celtic(const Diagram& d);

enum class PcgKind { IsolatedVertex, Arc, Cycle };

struct PcgComponent {
    PcgKind kind;
    /// IsolatedVertex: the single vertex.  Arc: endpoint to endpoint,
    /// starting from the lexicographically smaller endpoint.  Cycle: cyclic
    /// order with the designated non-corner vertex last.
    std::vector<Point2> vertices;
};

/// Decomposes the problem crossing graph; requires a Celtic-free source
/// diagram.  Throws NotTwoNearRegular or NoNonCornerOnCycle if that
/// precondition was violated.
std::vector<PcgComponent> pcg_components(const ProblemCrossingGraph& pcg);

struct StructuralReport {
    bool two_near_regular = false;
    bool deleted_square_free = false;
    bool cycles_have_non_corner = false;

    bool all() const {
        return two_near_regular && deleted_square_free && cycles_have_non_corner;
    }
};

/// The three structural predicates of the problem crossing graph; all must
/// hold whenever the diagram has no Celtic configuration.
StructuralReport structural_report(const Diagram& d);

}  // namespace latk
