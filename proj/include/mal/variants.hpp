#pragma once

#include "mal/labeling.hpp"

namespace mal {

// Replace every undirected edge by its two opposite arcs.
inline Graph bidirect(const Graph& g) {
    if (g.directed()) throw std::invalid_argument("bidirect: graph is already directed");
    Graph d(g.num_vertices(), true);
    for (const auto& [u, v] : g.edges()) {
        d.add_edge(u, v);
        d.add_edge(v, u);
    }
    return d;
}

// Collapse a feasible labeling of bidirect(g) back onto g by unioning the two
// directions of each edge. Every directed temporal path survives, so
// feasibility is preserved and the label count never grows.
inline Labeling undirect_labeling(const Graph& g, const Labeling& directed_labeling) {
    if (g.directed()) throw std::invalid_argument("undirect_labeling: base graph must be undirected");
    Graph bd = bidirect(g);
    TemporalGraph tg(bd, directed_labeling);
    if (!is_temporally_connected(tg))
        throw InfeasibleError("undirect_labeling: directed labeling is not temporally connected");
    Labeling lambda;
    for (const auto& [arc, labels] : directed_labeling.entries())
        for (int t : labels) lambda.add(g.key(arc.first, arc.second), t);
    return lambda;
}

namespace detail {

// Steiner tree via the metric-closure MST heuristic (2-approximation):
// MST over terminal shortest-path distances, expanded back to graph paths,
// then pruned to a tree with no non-terminal leaves. Returned as an edge list.
inline std::vector<EdgeKey> steiner_tree(const Graph& g, const std::vector<int>& terminals) {
    std::vector<SptResult> trees;
    trees.reserve(terminals.size());
    for (int t : terminals) trees.push_back(bfs_spt(g, t));

    const size_t k = terminals.size();
    std::vector<bool> in_mst(k, false);
    std::vector<int> best_dist(k, kUnreachable), best_from(k, 0);
    in_mst[0] = true;
    for (size_t i = 1; i < k; ++i) {
        best_dist[i] = trees[0].dist[static_cast<size_t>(terminals[i])];
        best_from[i] = 0;
    }
    std::set<EdgeKey> edge_set;
    auto add_path = [&](const SptResult& spt, int to) {
        for (int v = to; spt.parent[static_cast<size_t>(v)] != -1; v = spt.parent[static_cast<size_t>(v)])
            edge_set.insert(g.key(v, spt.parent[static_cast<size_t>(v)]));
    };
    for (size_t round = 1; round < k; ++round) {
        size_t pick = 0;
        int pick_dist = kUnreachable;
        for (size_t i = 0; i < k; ++i)
            if (!in_mst[i] && best_dist[i] < pick_dist) {
                pick = i;
                pick_dist = best_dist[i];
            }
        in_mst[pick] = true;
        add_path(trees[static_cast<size_t>(best_from[pick])], terminals[pick]);
        for (size_t i = 0; i < k; ++i) {
            if (in_mst[i]) continue;
            int d = trees[pick].dist[static_cast<size_t>(terminals[i])];
            if (d < best_dist[i]) {
                best_dist[i] = d;
                best_from[i] = static_cast<int>(pick);
            }
        }
    }

    // Take a BFS tree of the union and shave non-terminal leaves.
    const int n = g.num_vertices();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& [u, v] : edge_set) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<int> parent(static_cast<size_t>(n), -2);
    std::vector<int> order;
    parent[static_cast<size_t>(terminals[0])] = -1;
    order.push_back(terminals[0]);
    for (size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        std::sort(adj[static_cast<size_t>(u)].begin(), adj[static_cast<size_t>(u)].end());
        for (int v : adj[static_cast<size_t>(u)]) {
            if (parent[static_cast<size_t>(v)] != -2) continue;
            parent[static_cast<size_t>(v)] = u;
            order.push_back(v);
        }
    }
    std::vector<bool> keep(static_cast<size_t>(n), false);
    for (int t : terminals) keep[static_cast<size_t>(t)] = true;
    std::vector<int> child_count(static_cast<size_t>(n), 0);
    for (int v : order)
        if (parent[static_cast<size_t>(v)] >= 0) ++child_count[static_cast<size_t>(parent[static_cast<size_t>(v)])];
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (keep[static_cast<size_t>(v)] || child_count[static_cast<size_t>(v)] > 0 ||
            parent[static_cast<size_t>(v)] < 0)
            continue;
        --child_count[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        parent[static_cast<size_t>(v)] = -2;  // pruned
    }
    std::vector<EdgeKey> result;
    for (int v : order)
        if (parent[static_cast<size_t>(v)] >= 0) result.push_back(g.key(v, parent[static_cast<size_t>(v)]));
    return result;
}

}  // namespace detail

// Steiner labeling: 2-approximate Steiner tree over the terminals, then the
// two-label folklore scheme on that tree rooted at a tree center. All ordered
// terminal pairs become temporally connected with at most 2|E(tree)| labels.
inline Labeling label_msl(const Graph& g, const std::vector<int>& terminals) {
    if (terminals.empty()) throw std::invalid_argument("label_msl: empty terminal set");
    for (int t : terminals) g.check_vertex(t);
    if (g.num_vertices() == 0) throw std::invalid_argument("label_msl: empty graph");
    if (!is_connected(g)) throw InfeasibleError("label_msl: graph is not connected");

    std::vector<int> ts(terminals);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    Labeling lambda;
    if (ts.size() <= 1) return lambda;

    auto tree_edges = detail::steiner_tree(g, ts);
    Graph tree(g.num_vertices());
    for (const auto& [u, v] : tree_edges) tree.add_edge(u, v);

    // Center of the tree restricted to its own vertices.
    std::vector<int> tree_vertices;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (tree.degree(v) > 0) tree_vertices.push_back(v);
    int center = tree_vertices.front(), center_ecc = kUnreachable;
    for (int v : tree_vertices) {
        auto dist = bfs_spt(tree, v).dist;
        int ecc = 0;
        for (int u : tree_vertices) ecc = std::max(ecc, dist[static_cast<size_t>(u)]);
        if (ecc < center_ecc) {
            center_ecc = ecc;
            center = v;
        }
    }
    auto spt = bfs_spt(tree, center);
    int height = 0;
    for (int v : tree_vertices) height = std::max(height, spt.dist[static_cast<size_t>(v)]);
    for (int v : tree_vertices) {
        if (spt.parent[static_cast<size_t>(v)] < 0) continue;
        const int q = spt.dist[static_cast<size_t>(v)];
        lambda.add(g, v, spt.parent[static_cast<size_t>(v)], height - q + 1);
        lambda.add(g, v, spt.parent[static_cast<size_t>(v)], height + q);
    }
    return lambda;
}

}  // namespace mal
