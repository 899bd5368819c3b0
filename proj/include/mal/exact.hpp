#pragma once

#include <chrono>
#include <numeric>

#include "mal/labeling.hpp"

namespace mal {

// Caps keeping the exhaustive solvers inside oracle territory.
struct ExactBudget {
    long long max_edge_label_slots = 64;  // cap on m*a for exact_mal
    long long max_edges = 20;             // cap on m for exact_dcss
    double time_limit_seconds = 120.0;

    void validate() const {
        if (max_edge_label_slots <= 0 || max_edges <= 0 || time_limit_seconds <= 0)
            throw std::invalid_argument("ExactBudget: all fields must be positive");
    }
};

namespace detail {

// Visits k-subsets of [0,total) in lexicographic order until the visitor
// returns true; returns whether a visit succeeded.
template <class F>
bool for_each_combination(long long total, long long k, F&& visit) {
    if (k < 0 || k > total) return false;
    std::vector<int> c(static_cast<size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        if (visit(c)) return true;
        long long i = k - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == total - k + i) --i;
        if (i < 0) return false;
        ++c[static_cast<size_t>(i)];
        for (long long j = i + 1; j < k; ++j)
            c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
}

class Deadline {
public:
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds))) {}

    void check(const char* who) {
        if (++calls_ % 4096 != 0) return;
        if (std::chrono::steady_clock::now() > end_)
            throw BudgetExceededError(std::string(who) + ": time budget exceeded");
    }

private:
    std::chrono::steady_clock::time_point end_;
    long long calls_ = 0;
};

// Connectivity check over a slot subset. Slots are label-major
// (slot = (label-1)*m + edge), so ascending slot order is label order.
// In-place relaxation is equivalent to snapshot semantics here: an arrival
// set to t never satisfies the strict guard `< t` within the same label.
class SlotChecker {
public:
    SlotChecker(const Graph& g) : g_(g), edges_(g.edges()), arrival_(g.num_vertices()) {}

    bool connected(const std::vector<int>& slots) {
        const int n = g_.num_vertices();
        const int m = static_cast<int>(edges_.size());
        // Support must span and be connected before the temporal check.
        comp_.assign(n, -1);
        int comps = n;
        for (int s : slots) {
            const auto& [u, v] = edges_[static_cast<size_t>(s % m)];
            if (join(u, v)) --comps;
        }
        if (comps != 1) return false;
        for (int src = 0; src < n; ++src) {
            std::fill(arrival_.begin(), arrival_.end(), kUnreachable);
            arrival_[src] = 0;
            int reached = 1;
            for (int s : slots) {
                const int t = s / m + 1;
                const auto& [u, v] = edges_[static_cast<size_t>(s % m)];
                if (arrival_[u] < t && t < arrival_[v]) {
                    arrival_[v] = t;
                    ++reached;
                } else if (!g_.directed() && arrival_[v] < t && t < arrival_[u]) {
                    arrival_[u] = t;
                    ++reached;
                }
            }
            if (reached != n) return false;
        }
        return true;
    }

private:
    bool join(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        comp_[rv] = ru;
        return true;
    }
    int find(int v) {
        while (comp_[v] >= 0) v = comp_[v];
        return v;
    }

    const Graph& g_;
    const std::vector<EdgeKey>& edges_;
    std::vector<int> arrival_;
    std::vector<int> comp_;
};

}  // namespace detail

// Minimum-label feasible labeling by iterative deepening on the total label
// count over the m*a (edge,label) slots. Exact, but only at oracle scale.
inline Labeling exact_mal(const Graph& g, int a, const ExactBudget& budget = {}) {
    budget.validate();
    if (a < 1) throw std::invalid_argument("exact_mal: age must be >= 1");
    const int n = g.num_vertices();
    if (n <= 1) return {};
    if (!is_connected(g)) throw InfeasibleError("exact_mal: graph is not connected");
    if (a < metrics(g).diameter) throw InfeasibleError("exact_mal: age below the diameter");
    const long long m = g.num_edges();
    const long long slots = m * a;
    if (slots > budget.max_edge_label_slots)
        throw BudgetExceededError("exact_mal: m*a exceeds the slot budget");

    detail::Deadline deadline(budget.time_limit_seconds);
    detail::SlotChecker checker(g);
    std::vector<int> best;
    const long long lower = std::max<long long>(2LL * n - 4, n - 1);
    for (long long k = lower; k <= slots; ++k) {
        bool found = detail::for_each_combination(slots, k, [&](const std::vector<int>& c) {
            deadline.check("exact_mal");
            if (!checker.connected(c)) return false;
            best = c;
            return true;
        });
        if (found) break;
    }
    // The full slot set assigns [a] to every edge and a >= D, so the search
    // always terminates with a solution.
    Labeling lambda;
    for (int s : best) {
        const auto& e = g.edges()[static_cast<size_t>(s % m)];
        lambda.add(g.key(e.first, e.second), static_cast<int>(s / m) + 1);
    }
    return lambda;
}

// Minimum-edge spanning subgraph of diameter <= d by subset enumeration in
// increasing edge count.
inline Graph exact_dcss(const Graph& g, int d, const ExactBudget& budget = {}) {
    budget.validate();
    const int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("exact_dcss: empty graph");
    if (n == 1) return Graph(1, g.directed());
    if (!is_connected(g)) throw InfeasibleError("exact_dcss: graph is not connected");
    if (d < metrics(g).diameter) throw InfeasibleError("exact_dcss: d below the diameter");
    const long long m = g.num_edges();
    if (m > budget.max_edges) throw BudgetExceededError("exact_dcss: m exceeds the edge budget");

    detail::Deadline deadline(budget.time_limit_seconds);
    std::vector<int> best;
    for (long long k = n - 1; k <= m; ++k) {
        bool found = detail::for_each_combination(m, k, [&](const std::vector<int>& c) {
            deadline.check("exact_dcss");
            Graph h(n, g.directed());
            for (int idx : c) {
                const auto& e = g.edges()[static_cast<size_t>(idx)];
                h.add_edge(e.first, e.second);
            }
            for (int s = 0; s < n; ++s) {
                auto dist = bfs_spt(h, s).dist;
                for (int v = 0; v < n; ++v)
                    if (dist[v] == kUnreachable || dist[v] > d) return false;
            }
            best = c;
            return true;
        });
        if (found) break;
    }
    Graph h(n, g.directed());
    for (int idx : best) {
        const auto& e = g.edges()[static_cast<size_t>(idx)];
        h.add_edge(e.first, e.second);
    }
    return h;
}

}  // namespace mal
