#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mal/graph.hpp"

namespace mal {

// Map from edge to a strictly increasing list of positive integer labels.
// Keys must be canonical edge keys of the companion graph (see Graph::key).
class Labeling {
public:
    void add(EdgeKey e, int label) {
        if (label < 1) throw std::invalid_argument("Labeling: labels must be >= 1");
        auto& list = entries_[e];
        auto it = std::lower_bound(list.begin(), list.end(), label);
        if (it == list.end() || *it != label) list.insert(it, label);
    }

    void add(const Graph& g, int u, int v, int label) { add(g.key(u, v), label); }

    const std::vector<int>& labels(EdgeKey e) const {
        static const std::vector<int> empty;
        auto it = entries_.find(e);
        return it == entries_.end() ? empty : it->second;
    }

    long long total_labels() const {
        long long total = 0;
        for (const auto& [e, list] : entries_) total += static_cast<long long>(list.size());
        return total;
    }

    int lifetime() const {
        int max_label = 0;
        for (const auto& [e, list] : entries_)
            if (!list.empty()) max_label = std::max(max_label, list.back());
        return max_label;
    }

    // Edges carrying at least one label, in canonical (u,v) order.
    std::vector<EdgeKey> support() const {
        std::vector<EdgeKey> edges;
        for (const auto& [e, list] : entries_)
            if (!list.empty()) edges.push_back(e);
        return edges;
    }

    const std::map<EdgeKey, std::vector<int>>& entries() const { return entries_; }

private:
    std::map<EdgeKey, std::vector<int>> entries_;
};

struct TemporalGraph {
    Graph graph;
    Labeling labeling;

    TemporalGraph(Graph g, Labeling l) : graph(std::move(g)), labeling(std::move(l)) {
        for (const auto& [e, list] : labeling.entries()) {
            if (!graph.has_edge(e.first, e.second) || e != graph.key(e.first, e.second))
                throw std::invalid_argument("TemporalGraph: label on a non-edge");
        }
    }
};

inline long long count_labels(const TemporalGraph& tg) { return tg.labeling.total_labels(); }
inline int lifetime(const TemporalGraph& tg) { return tg.labeling.lifetime(); }

namespace detail {

struct Occurrence {
    int label;
    int u, v;
};

inline std::vector<Occurrence> occurrences_by_label(const TemporalGraph& tg) {
    std::vector<Occurrence> occ;
    for (const auto& [e, list] : tg.labeling.entries())
        for (int t : list) occ.push_back({t, e.first, e.second});
    std::stable_sort(occ.begin(), occ.end(),
                     [](const Occurrence& a, const Occurrence& b) { return a.label < b.label; });
    return occ;
}

// One pass over label-sorted occurrences. Occurrences sharing a label are
// relaxed against a snapshot of arrivals strictly below that label, so two
// moves at the same time cannot chain (temporal paths are strict).
inline void relax_from(const Graph& g, const std::vector<Occurrence>& occ, int source,
                       std::vector<int>& arrival) {
    arrival.assign(g.num_vertices(), kUnreachable);
    arrival[source] = 0;
    std::vector<std::pair<int, int>> pending;
    size_t i = 0;
    while (i < occ.size()) {
        const int t = occ[i].label;
        pending.clear();
        size_t j = i;
        for (; j < occ.size() && occ[j].label == t; ++j) {
            const auto& o = occ[j];
            if (arrival[o.u] < t) pending.emplace_back(o.v, t);
            if (!g.directed() && arrival[o.v] < t) pending.emplace_back(o.u, t);
        }
        for (auto [v, at] : pending)
            if (at < arrival[v]) arrival[v] = at;
        i = j;
    }
}

}  // namespace detail

// Per-vertex minimum final label over strict temporal paths from source
// (0 at the source itself, kUnreachable where no temporal path exists).
inline std::vector<int> earliest_arrival(const TemporalGraph& tg, int source) {
    tg.graph.check_vertex(source);
    auto occ = detail::occurrences_by_label(tg);
    std::vector<int> arrival;
    detail::relax_from(tg.graph, occ, source, arrival);
    return arrival;
}

struct ConnectivityResult {
    bool connected = false;
    std::optional<std::pair<int, int>> unreachable_pair;  // first failing ordered pair
    std::optional<int> offending_label;                   // lifetime above maxAge
    explicit operator bool() const { return connected; }
};

inline ConnectivityResult is_temporally_connected(const TemporalGraph& tg,
                                                  std::optional<int> max_age = std::nullopt) {
    ConnectivityResult result;
    if (max_age && tg.labeling.lifetime() > *max_age) {
        result.offending_label = tg.labeling.lifetime();
        return result;
    }
    const int n = tg.graph.num_vertices();
    auto occ = detail::occurrences_by_label(tg);
    std::vector<int> arrival;
    for (int s = 0; s < n; ++s) {
        detail::relax_from(tg.graph, occ, s, arrival);
        for (int v = 0; v < n; ++v) {
            if (arrival[v] == kUnreachable) {
                result.unreachable_pair = {s, v};
                return result;
            }
        }
    }
    result.connected = true;
    return result;
}

}  // namespace mal
