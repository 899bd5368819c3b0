#include <catch2/catch_amalgamated.hpp>

#include "mal/folklore.hpp"
#include "mal/variants.hpp"
#include "test_util.hpp"

using namespace mal;

TEST_CASE("bidirect doubles edges into arcs") {
    auto k2 = complete(2);
    auto d2 = bidirect(k2);
    CHECK(d2.directed());
    CHECK(d2.num_edges() == 2);

    CHECK(bidirect(star(4)).num_edges() == 6);
    CHECK_THROWS_AS(bidirect(bidirect(k2)), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int it = 0; it < 5; ++it) {
        int n = 2 + static_cast<int>(rng() % 30);
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        auto g = random_connected(n, n - 1 + static_cast<long long>(rng() % (max_m - n + 2)), rng());
        auto d = bidirect(g);
        CHECK(d.num_edges() == 2 * g.num_edges());
        CHECK(is_connected(d));  // strongly connected iff g connected
    }
}

TEST_CASE("undirect_labeling folds directions and preserves feasibility") {
    auto g = star(4);
    auto bd = bidirect(g);

    SECTION("symmetric labels halve") {
        Labeling dl;
        for (const auto& [u, v] : g.edges()) {
            for (int t : {1, 2}) {
                dl.add(bd.key(u, v), t);
                dl.add(bd.key(v, u), t);
            }
        }
        auto lambda = undirect_labeling(g, dl);
        CHECK(lambda.total_labels() == dl.total_labels() / 2);
        CHECK(is_temporally_connected({g, lambda}, dl.lifetime()).connected);
    }
    SECTION("disjoint direction labels are kept whole") {
        Labeling dl;
        for (const auto& [u, v] : g.edges()) {
            dl.add(bd.key(u, v), u == 0 ? 3 : 1);   // outward at 3, inward at 1
            dl.add(bd.key(v, u), u == 0 ? 1 : 3);
        }
        REQUIRE(is_temporally_connected({bd, dl}).connected);
        auto lambda = undirect_labeling(g, dl);
        CHECK(lambda.total_labels() == dl.total_labels());
        CHECK(is_temporally_connected({g, lambda}, 3).connected);
    }
    SECTION("infeasible directed labelings are rejected") {
        Labeling dl;
        dl.add(bd.key(0, 1), 1);
        CHECK_THROWS_AS(undirect_labeling(g, dl), InfeasibleError);
    }
}

TEST_CASE("undirect_labeling on doubled folklore labelings of random graphs") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 5; ++it) {
        int n = 4 + static_cast<int>(rng() % 40);
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        auto g = random_connected(n, n - 1 + static_cast<long long>(rng() % (max_m - n + 2)), rng());
        auto base = label_2r(g);
        auto bd = bidirect(g);
        Labeling dl;
        for (const auto& [e, labels] : base.entries())
            for (int t : labels) {
                dl.add(bd.key(e.first, e.second), t);
                dl.add(bd.key(e.second, e.first), t);
            }
        auto lambda = undirect_labeling(g, dl);
        CHECK(lambda.total_labels() <= dl.total_labels());
        CHECK(is_temporally_connected({g, lambda}, base.lifetime()).connected);
    }
}

namespace {

// Exhaustive Steiner tree size (edges) for tiny instances.
int exact_steiner_edges(const Graph& g, const std::vector<int>& terminals) {
    const int n = g.num_vertices();
    std::vector<int> extra;
    for (int v = 0; v < n; ++v)
        if (std::find(terminals.begin(), terminals.end(), v) == terminals.end()) extra.push_back(v);
    int best = n;
    for (unsigned mask = 0; mask < (1u << extra.size()); ++mask) {
        std::set<int> keep(terminals.begin(), terminals.end());
        for (size_t i = 0; i < extra.size(); ++i)
            if (mask & (1u << i)) keep.insert(extra[i]);
        // spanning tree of the induced subgraph, if connected
        std::vector<int> verts(keep.begin(), keep.end());
        std::map<int, int> index;
        for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
        Graph sub(static_cast<int>(verts.size()));
        for (const auto& [u, v] : g.edges())
            if (keep.count(u) && keep.count(v)) sub.add_edge(index[u], index[v]);
        if (is_connected(sub)) best = std::min(best, static_cast<int>(verts.size()) - 1);
    }
    return best;
}

}  // namespace

TEST_CASE("label_msl fixtures") {
    auto g = random_connected(12, 20, 9);

    SECTION("all vertices as terminals behaves like a spanning-tree labeling") {
        std::vector<int> all(12);
        std::iota(all.begin(), all.end(), 0);
        auto lambda = label_msl(g, all);
        CHECK(lambda.total_labels() == 2 * 11);
        CHECK(is_temporally_connected({g, lambda}).connected);
    }
    SECTION("singleton terminal set is vacuous") {
        CHECK(label_msl(g, {5}).total_labels() == 0);
    }
    SECTION("two adjacent terminals label one edge") {
        auto p2 = complete(2);
        auto lambda = label_msl(p2, {0, 1});
        CHECK(lambda.total_labels() <= 2);
        auto arrival01 = earliest_arrival({p2, lambda}, 0);
        auto arrival10 = earliest_arrival({p2, lambda}, 1);
        CHECK(arrival01[1] != kUnreachable);
        CHECK(arrival10[0] != kUnreachable);
    }
    CHECK_THROWS_AS(label_msl(g, {}), std::invalid_argument);
}

TEST_CASE("label_msl connects every ordered terminal pair") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 10; ++it) {
        int n = 5 + static_cast<int>(rng() % 30);
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        auto g = random_connected(n, n - 1 + static_cast<long long>(rng() % (max_m - n + 2)), rng());
        std::set<int> terminal_set;
        int k = 2 + static_cast<int>(rng() % 5);
        while (static_cast<int>(terminal_set.size()) < k)
            terminal_set.insert(static_cast<int>(rng() % n));
        std::vector<int> terminals(terminal_set.begin(), terminal_set.end());
        auto lambda = label_msl(g, terminals);
        TemporalGraph tg(g, lambda);
        for (int s : terminals) {
            auto arrival = earliest_arrival(tg, s);
            for (int t : terminals) CHECK(arrival[t] != kUnreachable);
        }
        CHECK(lambda.total_labels() <= 2LL * static_cast<long long>(lambda.support().size()));
    }
}

TEST_CASE("steiner tree stays within twice the optimum on tiny instances") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 15; ++it) {
        int n = 5 + static_cast<int>(rng() % 6);  // n <= 10
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        auto g = random_connected(n, n - 1 + static_cast<long long>(rng() % (max_m - n + 2)), rng());
        std::set<int> terminal_set;
        int k = 2 + static_cast<int>(rng() % 3);
        while (static_cast<int>(terminal_set.size()) < k)
            terminal_set.insert(static_cast<int>(rng() % n));
        std::vector<int> terminals(terminal_set.begin(), terminal_set.end());
        auto lambda = label_msl(g, terminals);
        const int tree_edges = static_cast<int>(lambda.support().size());
        CHECK(tree_edges <= 2 * exact_steiner_edges(g, terminals));
    }
}
