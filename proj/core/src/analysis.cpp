#include "latk/analysis.hpp"

#include <algorithm>

namespace latk {

bool LatticeGraph::has_edge(const Point2& u, const Point2& v) const {
    auto it = adj.find(u);
    if (it == adj.end())
        return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

std::size_t LatticeGraph::degree(const Point2& v) const {
    auto it = adj.find(v);
    return it == adj.end() ? 0 : it->second.size();
}

void LatticeGraph::add_edge(const Point2& u, const Point2& v) {
    auto& nu = adj[u];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    auto& nv = adj[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

std::vector<std::pair<Point2, Point2>> LatticeGraph::edges() const {
    std::vector<std::pair<Point2, Point2>> out;
    for (const auto& [u, nbrs] : adj)
        for (const Point2& v : nbrs)
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::size_t LatticeGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& [u, nbrs] : adj) {
        (void)u;
        twice += nbrs.size();
    }
    return twice / 2;
}

bool is_corner_of(const LatticeGraph& g, const Point2& v) {
    auto it = g.adj.find(v);
    if (it == g.adj.end() || it->second.size() != 2)
        return false;
    const Point2 da = it->second[0] - v;
    const Point2 db = it->second[1] - v;
    return (da.x == 0) != (db.x == 0);  // one edge vertical, one horizontal
}

CrossingGraph crossing_graph(const Diagram& d) {
    CrossingGraph cg;
    const auto& xs = d.crossings();
    for (const auto& [c, type] : xs) {
        (void)type;
        cg.graph.add_vertex(c);
        // only look right/up so each adjacent pair is added once
        for (Point2 n : {c + Point2{1, 0}, c + Point2{0, 1}})
            if (xs.count(n))
                cg.graph.add_edge(c, n);
    }
    return cg;
}

BadNeighborReport bad_neighbor_pairs(const Diagram& d, const CrossingGraph& cg,
                                     const Point2& c) {
    const CrossingType want = opposite(d.crossing_type(c));
    std::vector<Point2> x_nbrs, y_nbrs;
    auto it = cg.graph.adj.find(c);
    if (it != cg.graph.adj.end()) {
        for (const Point2& n : it->second) {
            if (d.crossing_type(n) != want)
                continue;
            (n.y == c.y ? x_nbrs : y_nbrs).push_back(n);
        }
    }
    BadNeighborReport report;
    for (const Point2& a : x_nbrs)
        for (const Point2& b : y_nbrs)
            report.pairs.emplace_back(std::min(a, b), std::max(a, b));
    std::sort(report.pairs.begin(), report.pairs.end());
    for (const auto& [a, b] : report.pairs) {
        report.bad_neighbors.push_back(a);
        report.bad_neighbors.push_back(b);
    }
    std::sort(report.bad_neighbors.begin(), report.bad_neighbors.end());
    report.bad_neighbors.erase(
        std::unique(report.bad_neighbors.begin(), report.bad_neighbors.end()),
        report.bad_neighbors.end());
    return report;
}

ProblemCrossingGraph problem_crossing_graph(const Diagram& d) {
    const CrossingGraph cg = crossing_graph(d);
    std::map<Point2, BadNeighborReport> reports;
    for (const auto& [c, type] : d.crossings()) {
        (void)type;
        BadNeighborReport r = bad_neighbor_pairs(d, cg, c);
        if (r.problem())
            reports.emplace(c, std::move(r));
    }
    ProblemCrossingGraph pcg;
    for (const auto& [c, r] : reports) {
        (void)r;
        pcg.graph.add_vertex(c);
    }
    for (const auto& [u, v] : cg.graph.edges()) {
        auto ru = reports.find(u);
        auto rv = reports.find(v);
        if (ru == reports.end() || rv == reports.end())
            continue;
        const bool u_bad_of_v = std::binary_search(rv->second.bad_neighbors.begin(),
                                                   rv->second.bad_neighbors.end(), u);
        const bool v_bad_of_u = std::binary_search(ru->second.bad_neighbors.begin(),
                                                   ru->second.bad_neighbors.end(), v);
        if (u_bad_of_v && v_bad_of_u)
            pcg.graph.add_edge(u, v);
    }
    return pcg;
}

std::optional<CelticWitness> find_celtic(const Diagram& d) {
    const CrossingGraph cg = crossing_graph(d);
    const auto& xs = d.crossings();
    for (const auto& [p, type] : xs) {
        (void)type;
        const std::array<Point2, 4> sq = {p, p + Point2{1, 0}, p + Point2{1, 1},
                                          p + Point2{0, 1}};
        if (!xs.count(sq[1]) || !xs.count(sq[2]) || !xs.count(sq[3]))
            continue;
        // Each corner must be a problem crossing whose two square neighbors
        // are among its bad neighbors.
        bool celtic = true;
        for (int i = 0; i < 4 && celtic; ++i) {
            BadNeighborReport r = bad_neighbor_pairs(d, cg, sq[i]);
            const Point2& n1 = sq[(i + 1) % 4];
            const Point2& n2 = sq[(i + 3) % 4];
            celtic = r.problem() &&
                     std::binary_search(r.bad_neighbors.begin(),
                                        r.bad_neighbors.end(), n1) &&
                     std::binary_search(r.bad_neighbors.begin(),
                                        r.bad_neighbors.end(), n2);
        }
        if (celtic) {
            CelticWitness w;
            w.corners = sq;
            for (int i = 0; i < 4; ++i)
                w.types[i] = xs.at(sq[i]);
            return w;
        }
    }
    return std::nullopt;
}

namespace {

std::vector<std::vector<Point2>> connected_components(const LatticeGraph& g) {
    std::vector<std::vector<Point2>> comps;
    std::set<Point2> seen;
    for (const auto& [v, nbrs] : g.adj) {
        (void)nbrs;
        if (seen.count(v))
            continue;
        std::vector<Point2> comp, stack{v};
        seen.insert(v);
        while (!stack.empty()) {
            Point2 cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            for (const Point2& n : g.adj.at(cur))
                if (seen.insert(n).second)
                    stack.push_back(n);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Walks a path or cycle starting at `from`, first moving to `next`.
std::vector<Point2> walk_from(const LatticeGraph& g, Point2 from, Point2 next) {
    std::vector<Point2> order{from};
    Point2 prev = from;
    Point2 cur = next;
    while (cur != from) {
        order.push_back(cur);
        const auto& nbrs = g.adj.at(cur);
        if (nbrs.size() == 1)
            break;  // reached the far endpoint of a path
        cur = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = order.back();
    }
    return order;
}

}  // namespace

std::vector<PcgComponent> pcg_components(const ProblemCrossingGraph& pcg) {
    std::vector<PcgComponent> out;
    for (const auto& comp : connected_components(pcg.graph)) {
        for (const Point2& v : comp)
            if (pcg.graph.degree(v) > 2)
                throw Error(ErrorCode::NotTwoNearRegular,
                            "problem crossing " + to_string(v) +
                                " has more than two bad problem neighbors",
                            v);
        if (comp.size() == 1) {
            out.push_back({PcgKind::IsolatedVertex, comp});
            continue;
        }
        std::vector<Point2> endpoints;
        for (const Point2& v : comp)
            if (pcg.graph.degree(v) == 1)
                endpoints.push_back(v);
        if (endpoints.size() == 2) {
            // comp is sorted, so endpoints are in lexicographic order already.
            const Point2 start = endpoints[0];
            out.push_back(
                {PcgKind::Arc, walk_from(pcg.graph, start, pcg.graph.adj.at(start)[0])});
        } else if (endpoints.empty()) {
            std::optional<Point2> designated;
            for (const Point2& v : comp) {
                if (!is_corner_of(pcg.graph, v)) {
                    designated = v;
                    break;  // comp sorted: first hit is the lex-min non-corner
                }
            }
            if (!designated)
                throw Error(ErrorCode::NoNonCornerOnCycle,
                            "cycle component has corners only; source diagram "
                            "must contain a Celtic configuration");
            // Start at the designated vertex's smaller neighbor and walk the
            // cycle so the designated vertex comes last.
            const Point2 first = pcg.graph.adj.at(*designated)[0];
            std::vector<Point2> order = walk_from(pcg.graph, *designated, first);
            std::rotate(order.begin(), order.begin() + 1, order.end());
            out.push_back({PcgKind::Cycle, std::move(order)});
        } else {
            throw Error(ErrorCode::NotTwoNearRegular,
                        "component is neither a path nor a cycle");
        }
    }
    return out;
}

StructuralReport structural_report(const Diagram& d) {
    const ProblemCrossingGraph pcg = problem_crossing_graph(d);
    const LatticeGraph& g = pcg.graph;

    StructuralReport report;
    report.two_near_regular = true;
    for (const auto& [v, nbrs] : g.adj) {
        (void)v;
        if (nbrs.size() > 2)
            report.two_near_regular = false;
    }

    report.deleted_square_free = true;
    for (const auto& [p, nbrs] : g.adj) {
        (void)nbrs;
        const Point2 r = p + Point2{1, 0}, t = p + Point2{1, 1}, u = p + Point2{0, 1};
        int present = int(g.has_edge(p, r)) + int(g.has_edge(r, t)) +
                      int(g.has_edge(u, t)) + int(g.has_edge(p, u));
        if (present >= 3)
            report.deleted_square_free = false;
    }

    report.cycles_have_non_corner = true;
    for (const auto& comp : connected_components(g)) {
        bool is_cycle = comp.size() >= 3;
        for (const Point2& v : comp)
            is_cycle = is_cycle && g.degree(v) == 2;
        if (!is_cycle)
            continue;
        bool has_non_corner = false;
        for (const Point2& v : comp)
            has_non_corner = has_non_corner || !is_corner_of(g, v);
        if (!has_non_corner)
            report.cycles_have_non_corner = false;
    }
    return report;
}

}  // namespace latk
