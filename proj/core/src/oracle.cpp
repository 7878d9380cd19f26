#include "latk/oracle.hpp"

#include <algorithm>

namespace latk {

int HeightConstraintGraph::node_index(const Edge2& e) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), e);
    return it != nodes.end() && *it == e ? int(it - nodes.begin()) : -1;
}

HeightConstraintGraph constraint_digraph(const Diagram& d) {
    HeightConstraintGraph g;
    std::set<Edge2> node_set;
    for (const auto& [c, type] : d.crossings()) {
        (void)type;
        auto [xs, ys] = strands_at(d, c);
        node_set.insert({xs.first, xs.second, ys.first, ys.second});
    }
    g.nodes.assign(node_set.begin(), node_set.end());
    g.successors.resize(g.nodes.size());
    for (const auto& [c, type] : d.crossings()) {
        auto [xs, ys] = strands_at(d, c);
        const Strand& over = type == CrossingType::XOver ? xs : ys;
        const Strand& under = type == CrossingType::XOver ? ys : xs;
        for (const Edge2& hi : {over.first, over.second}) {
            for (const Edge2& lo : {under.first, under.second}) {
                const int i = g.node_index(hi);
                const int j = g.node_index(lo);
                g.arcs.emplace_back(i, j);
                g.successors[i].push_back(j);
            }
        }
    }
    for (auto& succ : g.successors)
        std::sort(succ.begin(), succ.end());
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
}

namespace {

enum class Mark : unsigned char { White, Gray, Black };

// Returns a directed cycle as node indices if one exists.
std::vector<int> find_cycle(const HeightConstraintGraph& g) {
    const int n = int(g.nodes.size());
    std::vector<Mark> mark(n, Mark::White);
    std::vector<int> parent(n, -1);

    for (int root = 0; root < n; ++root) {
        if (mark[root] != Mark::White)
            continue;
        // iterative DFS keeping the gray path on an explicit stack
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        mark[root] = Mark::Gray;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < g.successors[v].size()) {
                const int u = g.successors[v][next++];
                if (mark[u] == Mark::Gray) {
                    std::vector<int> cycle{u};
                    for (int w = v; w != u; w = parent[w])
                        cycle.push_back(w);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    return cycle;
                }
                if (mark[u] == Mark::White) {
                    mark[u] = Mark::Gray;
                    parent[u] = v;
                    stack.emplace_back(u, 0);
                }
            } else {
                mark[v] = Mark::Black;
                stack.pop_back();
            }
        }
    }
    return {};
}

}  // namespace

OracleDecision oracle_liftable(const Diagram& d) {
    const HeightConstraintGraph g = constraint_digraph(d);
    OracleDecision decision;
    const std::vector<int> cycle = find_cycle(g);
    decision.liftable = cycle.empty();
    for (int i : cycle)
        decision.cycle.push_back(g.nodes[i]);
    return decision;
}

HeightAssignment oracle_heights(const Diagram& d) {
    const HeightConstraintGraph g = constraint_digraph(d);
    if (!find_cycle(g).empty())
        throw Error(ErrorCode::NotLiftable,
                    "height constraints contain a directed cycle");

    const int n = int(g.nodes.size());
    std::vector<int> layer(n, -1);
    // layer(v) = 0 for sinks, else 1 + max over successors
    for (int root = 0; root < n; ++root) {
        if (layer[root] >= 0)
            continue;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < g.successors[v].size()) {
                const int u = g.successors[v][next++];
                if (layer[u] < 0)
                    stack.emplace_back(u, 0);
            } else {
                int height = 0;
                for (int u : g.successors[v])
                    height = std::max(height, layer[u] + 1);
                layer[v] = height;
                stack.pop_back();
            }
        }
    }

    HeightAssignment h;
    for (int i = 0; i < n; ++i)
        h.set_height(g.nodes[i], layer[i]);
    return h;
}

Link3 oracle_lift(const Diagram& d) {
    return assemble_link3(d, oracle_heights(d));
}

}  // namespace latk
