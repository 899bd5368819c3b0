#pragma once

#include <functional>

#include "mal/dominating.hpp"
#include "mal/exact.hpp"
#include "mal/labeling.hpp"

namespace mal {

// Checks that h is a spanning connected subgraph of g with diameter <= d.
inline void verify_dcss_solution(const Graph& g, const Graph& h, int d) {
    if (h.num_vertices() != g.num_vertices())
        throw InfeasibleError("dcss: subgraph must span all vertices");
    for (const auto& [u, v] : h.edges())
        if (!g.has_edge(u, v)) throw InfeasibleError("dcss: subgraph uses a non-edge");
    if (g.num_vertices() == 0) return;
    if (g.num_vertices() == 1) return;
    Metrics m = metrics(h);  // throws when h is disconnected
    if (m.diameter > d) throw InfeasibleError("dcss: subgraph diameter exceeds the bound");
}

// Lemma-1(i) direction: every edge of the spanning subgraph carries the full
// label range [b], giving exactly b*|E(H)| labels and lifetime b.
inline Labeling dcss_to_mal(const Graph& h, int b) {
    if (b < 1) throw std::invalid_argument("dcss_to_mal: b must be >= 1");
    if (h.num_vertices() > 1 && metrics(h).diameter > b)
        throw InfeasibleError("dcss_to_mal: subgraph diameter exceeds b");
    Labeling lambda;
    for (const auto& [u, v] : h.edges())
        for (int t = 1; t <= b; ++t) lambda.add(h.key(u, v), t);
    return lambda;
}

// Lemma-1(ii) direction: drop the labels, keep the supporting edges.
inline Graph mal_to_dcss(const TemporalGraph& tg) {
    if (!is_temporally_connected(tg))
        throw InfeasibleError("mal_to_dcss: labeling is not temporally connected");
    Graph h(tg.graph.num_vertices(), tg.graph.directed());
    for (const auto& e : tg.labeling.support()) h.add_edge(e.first, e.second);
    return h;
}

// A pluggable DCSS algorithm; solutions are verified before use.
struct DcssSolver {
    std::string name;
    std::function<Graph(const Graph&, int)> solve;
};

// Theorem-2(ii) composition: solve DCSS at d=a, then label the subgraph with
// the full range [a].
inline Labeling solve_mal_via_dcss(const Graph& g, int a, const DcssSolver& solver) {
    if (g.num_vertices() > 1 && a < metrics(g).diameter)
        throw InfeasibleError("solve_mal_via_dcss: age below the diameter");
    Graph h = solver.solve(g, a);
    verify_dcss_solution(g, h, a);
    return dcss_to_mal(h, a);
}

// +2 additive spanner: all edges incident to low-degree vertices, plus one
// BFS tree per greedy hitter of the truncated high-degree neighborhoods.
// Certified edge bound for the tested range: kPlus2SpannerC * n^{3/2}
// (the greedy hitting set contributes the ln n factor absorbed into the
// constant; ln n + 2 < 8 for n <= 400).
inline constexpr double kPlus2SpannerC = 8.0;

inline Graph plus2_spanner(const Graph& g) {
    if (g.num_vertices() == 0) throw std::invalid_argument("plus2_spanner: empty graph");
    if (!is_connected(g)) throw InfeasibleError("plus2_spanner: graph is not connected");
    const int n = g.num_vertices();
    const int threshold = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    Graph h(n);
    for (const auto& [u, v] : g.edges())
        if (g.degree(u) < threshold || g.degree(v) < threshold) h.add_edge(u, v);
    std::vector<std::vector<int>> high_neighborhoods;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < threshold) continue;
        const auto& nb = g.neighbors(v);
        high_neighborhoods.emplace_back(nb.begin(), nb.begin() + threshold);
    }
    if (!high_neighborhoods.empty()) {
        for (int hitter : greedy_hitting_set(n, high_neighborhoods)) {
            auto spt = bfs_spt(g, hitter);
            for (int v = 0; v < n; ++v)
                if (spt.parent[v] >= 0 && !h.has_edge(v, spt.parent[v]))
                    h.add_edge(v, spt.parent[v]);
        }
    }
    return h;
}

// Always-available baseline: a BFS tree from a center (diameter <= 2R).
inline DcssSolver tree_baseline_solver() {
    return {"tree", [](const Graph& g, int d) {
                auto m = metrics(g);
                Graph h(g.num_vertices(), g.directed());
                auto spt = bfs_spt(g, m.center);
                for (int v = 0; v < g.num_vertices(); ++v)
                    if (spt.parent[v] >= 0) h.add_edge(v, spt.parent[v]);
                if (g.num_vertices() > 1 && metrics(h).diameter > d)
                    throw InfeasibleError("tree solver: BFS tree diameter exceeds d");
                return h;
            }};
}

inline DcssSolver plus2_solver() {
    return {"plus2", [](const Graph& g, int d) {
                Graph h = plus2_spanner(g);
                if (g.num_vertices() > 1 && metrics(h).diameter > d)
                    throw InfeasibleError("plus2 solver: spanner diameter exceeds d");
                return h;
            }};
}

inline DcssSolver exact_dcss_solver(ExactBudget budget = {}) {
    return {"exact", [budget](const Graph& g, int d) { return exact_dcss(g, d, budget); }};
}

}  // namespace mal
