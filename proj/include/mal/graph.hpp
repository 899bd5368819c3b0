#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mal/errors.hpp"

namespace mal {

using EdgeKey = std::pair<int, int>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Static simple graph on vertices 0..n-1. Undirected edges are normalized to
// (min,max); with the directed flag set, edges are ordered arcs. Immutable in
// spirit: build it, then only query it.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n, bool directed = false) : n_(n), directed_(directed), adj_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<EdgeKey>& edges, bool directed = false) {
        Graph g(n, directed);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        EdgeKey e = key(u, v);
        if (has_edge(u, v)) throw std::invalid_argument("Graph: duplicate edge rejected");
        edges_.push_back(e);
        insert_sorted(adj_[e.first], e.second);
        if (!directed_) insert_sorted(adj_[e.second], e.first);
    }

    int num_vertices() const { return n_; }
    long long num_edges() const { return static_cast<long long>(edges_.size()); }
    bool directed() const { return directed_; }

    // Out-neighbors, sorted ascending (both directions when undirected).
    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    const std::vector<EdgeKey>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        EdgeKey e = key(u, v);
        const auto& a = adj_[e.first];
        return std::binary_search(a.begin(), a.end(), e.second);
    }

    // Canonical key for an edge: sorted pair when undirected, as-is otherwise.
    EdgeKey key(int u, int v) const {
        if (!directed_ && u > v) std::swap(u, v);
        return {u, v};
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    }

private:
    static void insert_sorted(std::vector<int>& a, int v) {
        a.insert(std::lower_bound(a.begin(), a.end(), v), v);
    }

    int n_ = 0;
    bool directed_ = false;
    std::vector<EdgeKey> edges_;
    std::vector<std::vector<int>> adj_;
};

struct SptResult {
    int root = -1;
    std::vector<int> parent;  // -1 at the root and at unreachable vertices
    std::vector<int> dist;    // kUnreachable where no path exists
};

struct SpfResult {
    std::vector<int> roots;
    std::vector<int> parent;
    std::vector<int> dist;
    std::vector<int> root_of;  // nearest root, -1 if unreachable
};

namespace detail {

// Multi-source BFS; sources must be sorted for deterministic tie-breaking
// (lowest-numbered root, then lowest-numbered neighbor first).
inline void bfs(const Graph& g, const std::vector<int>& sources, std::vector<int>& parent,
                std::vector<int>& dist, std::vector<int>& root_of) {
    const int n = g.num_vertices();
    parent.assign(n, -1);
    dist.assign(n, kUnreachable);
    root_of.assign(n, -1);
    std::deque<int> queue;
    for (int s : sources) {
        dist[s] = 0;
        root_of[s] = s;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[v] != kUnreachable) continue;
            dist[v] = dist[u] + 1;
            parent[v] = u;
            root_of[v] = root_of[u];
            queue.push_back(v);
        }
    }
}

}  // namespace detail

inline SptResult bfs_spt(const Graph& g, int root) {
    g.check_vertex(root);
    SptResult r;
    r.root = root;
    std::vector<int> root_of;
    detail::bfs(g, {root}, r.parent, r.dist, root_of);
    return r;
}

inline SpfResult bfs_spf(const Graph& g, std::vector<int> roots) {
    if (roots.empty()) throw std::invalid_argument("bfs_spf: empty root set");
    for (int v : roots) g.check_vertex(v);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    SpfResult r;
    r.roots = roots;
    detail::bfs(g, roots, r.parent, r.dist, r.root_of);
    return r;
}

struct Metrics {
    int diameter = 0;
    int radius = 0;
    int center = 0;                // lowest-numbered vertex with ecc == radius
    std::vector<int> eccentricity;
};

inline bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return true;
    // Directed graphs are checked for strong connectivity.
    const int sources = g.directed() ? g.num_vertices() : 1;
    for (int s = 0; s < sources; ++s) {
        auto d = bfs_spt(g, s).dist;
        if (std::find(d.begin(), d.end(), kUnreachable) != d.end()) return false;
    }
    return true;
}

// Exact diameter/radius/eccentricities by all-pairs BFS. Throws on a
// disconnected (for directed: not strongly connected) graph.
inline Metrics metrics(const Graph& g) {
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("metrics: empty graph");
    Metrics m;
    m.eccentricity.assign(n, 0);
    m.diameter = 0;
    m.radius = kUnreachable;
    for (int s = 0; s < n; ++s) {
        auto spt = bfs_spt(g, s);
        int ecc = 0;
        for (int d : spt.dist) {
            if (d == kUnreachable) throw InfeasibleError("metrics: graph is not connected");
            ecc = std::max(ecc, d);
        }
        m.eccentricity[s] = ecc;
        m.diameter = std::max(m.diameter, ecc);
        if (ecc < m.radius) {
            m.radius = ecc;
            m.center = s;
        }
    }
    return m;
}

// True iff two distinct vertices share at least two common neighbors.
inline bool has_c4(const Graph& g) {
    const int n = g.num_vertices();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const auto& a = g.neighbors(u);
            const auto& b = g.neighbors(v);
            int common = 0;
            size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) {
                    ++common;
                    ++i;
                    ++j;
                } else if (a[i] < b[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
            if (common >= 2) return true;
        }
    }
    return false;
}

}  // namespace mal
