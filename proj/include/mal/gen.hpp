#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mal/graph.hpp"

namespace mal {

// Random connected graph: random-order spanning tree first, then m-(n-1)
// extra edges drawn uniformly from the remaining non-edges.
inline Graph random_connected(int n, long long m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected: need n >= 1");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges)
        throw std::invalid_argument("random_connected: m outside [n-1, n(n-1)/2]");
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Graph g(n);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge(order[i], order[pick(rng)]);
    }
    std::vector<EdgeKey> rest;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) rest.push_back({u, v});
    std::shuffle(rest.begin(), rest.end(), rng);
    for (long long i = 0; i < m - (n - 1); ++i) g.add_edge(rest[i].first, rest[i].second);
    return g;
}

// Star on k vertices: hub 0, leaves 1..k-1.
inline Graph star(int k) {
    if (k < 1) throw std::invalid_argument("star: need k >= 1");
    Graph g(k);
    for (int v = 1; v < k; ++v) g.add_edge(0, v);
    return g;
}

inline Graph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle: need k >= 3");
    Graph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

inline Graph path(int k) {
    if (k < 1) throw std::invalid_argument("path: need k >= 1");
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph complete(int k) {
    if (k < 1) throw std::invalid_argument("complete: need k >= 1");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace mal
