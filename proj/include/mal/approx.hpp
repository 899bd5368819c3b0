#pragma once

#include "mal/dominating.hpp"
#include "mal/folklore.hpp"
#include "mal/labeling.hpp"

namespace mal {

// One shortest path tree per source; the tree edge reaching v at depth q
// carries label q. At most n(n-1) labels, lifetime at most D.
inline Labeling label_trivial(const Graph& g) {
    detail::connected_metrics(g, "label_trivial");
    Labeling lambda;
    const int n = g.num_vertices();
    for (int s = 0; s < n; ++s) {
        auto spt = bfs_spt(g, s);
        for (int v = 0; v < n; ++v)
            if (spt.parent[v] >= 0) lambda.add(g, v, spt.parent[v], spt.dist[v]);
    }
    return lambda;
}

inline int n2_for_3half(int n) {
    int n2 = static_cast<int>(std::ceil(std::sqrt(n * std::log(static_cast<double>(n)))));
    return std::clamp(n2, 1, n);
}

inline int n2_for_5thirds(int n, int diameter) {
    double v = std::cbrt(static_cast<double>(diameter) * n * std::pow(std::log(static_cast<double>(n)), 2));
    int n2 = static_cast<int>(std::ceil(v));
    return std::clamp(n2, 1, n);
}

namespace detail {

// Phase 1 of the 3/2-scheme: per root v in S, tree edges carry D-q+1 so
// every vertex reaches v by a temporal path ending exactly at label D.
// Phase 2: a forest rooted at S carries D+q outward, q the depth below S.
inline void label_towards_and_from(const Graph& g, const std::vector<int>& s, int diameter,
                                   Labeling& lambda) {
    for (int root : s) {
        auto spt = bfs_spt(g, root);
        for (int v = 0; v < g.num_vertices(); ++v)
            if (spt.parent[v] >= 0) lambda.add(g, v, spt.parent[v], diameter - spt.dist[v] + 1);
    }
    auto spf = bfs_spf(g, s);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (spf.parent[v] >= 0) lambda.add(g, v, spf.parent[v], diameter + spf.dist[v]);
}

// Deterministic shortest path between two vertices, as a vertex sequence.
inline std::vector<int> shortest_path(const Graph& g, int from, int to) {
    auto spt = bfs_spt(g, from);
    std::vector<int> rev;
    for (int v = to; v != -1; v = spt.parent[v]) rev.push_back(v);
    return {rev.rbegin(), rev.rend()};
}

}  // namespace detail

// Theorem-11(i)-style labeling: lifetime <= ceil(3/2 D), at most
// (|S|+1)(n-1) labels where S is the side of the dominating set-pair whose
// coverage condition holds.
inline Labeling label_3half(const Graph& g) {
    auto m = detail::connected_metrics(g, "label_3half");
    Labeling lambda;
    const int n = g.num_vertices();
    if (n <= 1) return lambda;
    const int diameter = m.diameter;
    auto pair = dominating_set_pair(g, {1, 2}, n2_for_3half(n));
    const auto& s = pair.satisfied == 1 ? pair.s1 : pair.s2;
    detail::label_towards_and_from(g, s, diameter, lambda);
    return lambda;
}

// Theorem-11(ii)-style labeling: lifetime <= ceil(5/3 D). With condition 2
// it falls back to the 3/2 scheme on S2 (coverage radius ceil(2/3 D)); with
// condition 1 and B = floor(D/3) it uses three disjoint label windows:
// forest-to-roots in [1,B], root-pair paths in (B,B+D], forest-from-roots in
// (B+D,2B+D].
inline Labeling label_5thirds(const Graph& g) {
    auto m = detail::connected_metrics(g, "label_5thirds");
    Labeling lambda;
    const int n = g.num_vertices();
    if (n <= 1) return lambda;
    const int diameter = m.diameter;
    auto pair = dominating_set_pair(g, {1, 3}, n2_for_5thirds(n, diameter));
    if (pair.satisfied == 2) {
        detail::label_towards_and_from(g, pair.s2, diameter, lambda);
        return lambda;
    }
    const int b = pair.h1;  // floor(D/3)
    auto spf = bfs_spf(g, pair.s1);
    for (int v = 0; v < n; ++v) {
        if (spf.parent[v] < 0) continue;
        const int q = spf.dist[v];
        lambda.add(g, v, spf.parent[v], b - q + 1);
        lambda.add(g, v, spf.parent[v], b + diameter + q);
    }
    for (size_t i = 0; i < pair.s1.size(); ++i) {
        for (size_t j = i + 1; j < pair.s1.size(); ++j) {
            auto p = detail::shortest_path(g, pair.s1[i], pair.s1[j]);
            const int k = static_cast<int>(p.size()) - 1;
            for (int step = 1; step <= k; ++step) {
                lambda.add(g, p[static_cast<size_t>(step - 1)], p[static_cast<size_t>(step)], b + step);
                lambda.add(g, p[static_cast<size_t>(step - 1)], p[static_cast<size_t>(step)],
                           b + k - step + 1);
            }
        }
    }
    return lambda;
}

}  // namespace mal
