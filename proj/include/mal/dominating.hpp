#pragma once

#include <cmath>
#include <numeric>

#include "mal/graph.hpp"

namespace mal {

// Exact rational delta keeps h1 = floor(delta*D) free of floating-point
// trouble (e.g. (1.0/3.0)*6 rounds below 2).
struct Rational {
    int num = 1;
    int den = 2;
};

// Greedy max-coverage hitting set for a collection of equal-size vertex sets:
// repeatedly pick the element lying in the most unhit sets. The returned set
// hits every input set and has size at most ceil((n/l)*(ln N + 1)).
inline std::vector<int> greedy_hitting_set(int universe_size,
                                           const std::vector<std::vector<int>>& sets) {
    if (universe_size < 0) throw std::invalid_argument("greedy_hitting_set: negative universe");
    if (sets.empty()) return {};
    const size_t ell = sets.front().size();
    if (ell == 0) throw std::invalid_argument("greedy_hitting_set: empty set in collection");
    std::vector<std::vector<int>> containing(static_cast<size_t>(universe_size));
    for (size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].size() != ell)
            throw std::invalid_argument("greedy_hitting_set: sets must all have the same size");
        for (int e : sets[i]) {
            if (e < 0 || e >= universe_size)
                throw std::invalid_argument("greedy_hitting_set: element out of range");
            containing[static_cast<size_t>(e)].push_back(static_cast<int>(i));
        }
    }
    std::vector<int> gain(static_cast<size_t>(universe_size), 0);
    for (int e = 0; e < universe_size; ++e) gain[static_cast<size_t>(e)] =
        static_cast<int>(containing[static_cast<size_t>(e)].size());
    std::vector<bool> hit(sets.size(), false);
    size_t remaining = sets.size();
    std::vector<int> result;
    while (remaining > 0) {
        int best = -1;
        for (int e = 0; e < universe_size; ++e)
            if (best < 0 || gain[static_cast<size_t>(e)] > gain[static_cast<size_t>(best)]) best = e;
        result.push_back(best);
        for (int i : containing[static_cast<size_t>(best)]) {
            if (hit[static_cast<size_t>(i)]) continue;
            hit[static_cast<size_t>(i)] = true;
            --remaining;
            for (int e : sets[static_cast<size_t>(i)]) --gain[static_cast<size_t>(e)];
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

inline long long hitting_set_size_bound(int universe_size, int ell, long long num_sets) {
    if (num_sets <= 0) return 0;
    double bound = (static_cast<double>(universe_size) / ell) *
                   (std::log(static_cast<double>(num_sets)) + 1.0);
    return static_cast<long long>(std::ceil(bound));
}

struct DominatingSetPair {
    std::vector<int> s1;
    std::vector<int> s2;
    int h1 = 0;         // floor(delta * D)
    int h2 = 0;         // ceil((1-delta) * D)
    int satisfied = 0;  // which condition verifiably holds (1 or 2)
    Rational delta;
    int n2 = 0;         // requested size bound for s2
};

// The n2 vertices nearest to v, ties broken by ascending vertex index.
inline std::vector<int> nearest_vertices(const Graph& g, int v, int n2) {
    const int n = g.num_vertices();
    if (n2 < 1 || n2 > n) throw std::invalid_argument("nearest_vertices: n2 outside [1,n]");
    auto dist = bfs_spt(g, v).dist;
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return dist[a] < dist[b]; });
    order.resize(static_cast<size_t>(n2));
    std::sort(order.begin(), order.end());
    return order;
}

// Deterministic dominating set-pair: S1 hits every n2-nearest-neighborhood,
// S2 is the neighborhood of the vertex farthest from S1. At least one of the
// two coverage conditions is guaranteed to hold; the one that does is
// recorded in `satisfied`.
inline DominatingSetPair dominating_set_pair(const Graph& g, Rational delta, int n2) {
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("dominating_set_pair: empty graph");
    if (delta.den <= 0 || delta.num <= 0 || delta.num >= delta.den)
        throw std::invalid_argument("dominating_set_pair: delta must lie in (0,1)");
    if (n2 < 1 || n2 > n) throw std::invalid_argument("dominating_set_pair: n2 outside [1,n]");
    auto m = metrics(g);  // rejects disconnected graphs

    DominatingSetPair pair;
    pair.delta = delta;
    pair.n2 = n2;
    pair.h1 = static_cast<int>((static_cast<long long>(delta.num) * m.diameter) / delta.den);
    pair.h2 = m.diameter - pair.h1;

    std::vector<std::vector<int>> neighborhoods(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) neighborhoods[static_cast<size_t>(v)] = nearest_vertices(g, v, n2);
    pair.s1 = greedy_hitting_set(n, neighborhoods);

    auto from_s1 = bfs_spf(g, pair.s1);
    int farthest = 0;
    for (int v = 1; v < n; ++v)
        if (from_s1.dist[v] > from_s1.dist[farthest]) farthest = v;
    pair.s2 = neighborhoods[static_cast<size_t>(farthest)];

    if (from_s1.dist[farthest] <= pair.h1) {
        pair.satisfied = 1;
        return pair;
    }
    auto from_s2 = bfs_spf(g, pair.s2);
    for (int v = 0; v < n; ++v) {
        if (from_s2.dist[v] > pair.h2)
            throw std::logic_error("dominating_set_pair: neither coverage condition holds");
    }
    pair.satisfied = 2;
    return pair;
}

}  // namespace mal
