#include <catch2/catch_amalgamated.hpp>

#include "mal/gen.hpp"
#include "mal/io.hpp"
#include "test_util.hpp"

using namespace mal;

TEST_CASE("graph construction rejects bad edges") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);  // duplicate after normalization
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    CHECK(g.has_edge(1, 0));
    CHECK(g.num_edges() == 1);
}

TEST_CASE("bfs_spt on small fixtures") {
    auto p3 = path(3);
    auto spt = bfs_spt(p3, 0);
    CHECK(spt.dist == std::vector<int>{0, 1, 2});
    CHECK(spt.parent[2] == 1);

    auto k2 = complete(2);
    CHECK(bfs_spt(k2, 1).dist == std::vector<int>{1, 0});

    auto p4 = path(4);
    auto spf = bfs_spf(p4, {0, 3});
    CHECK(spf.dist == std::vector<int>{0, 1, 1, 0});
    CHECK(spf.root_of == std::vector<int>{0, 0, 3, 3});
    CHECK_THROWS_AS(bfs_spf(p4, {}), std::invalid_argument);
}

TEST_CASE("spt invariants: parent depths and a second independent BFS") {
    auto g = random_connected(60, 140, 7);
    auto spt = bfs_spt(g, 11);
    auto reference = testutil::naive_bfs_dist(g, 11);
    for (int v = 0; v < 60; ++v) {
        CHECK(spt.dist[v] == reference[v]);
        if (v != 11) {
            REQUIRE(spt.parent[v] >= 0);
            CHECK(spt.dist[v] == spt.dist[spt.parent[v]] + 1);
        }
    }
}

TEST_CASE("spf distance equals elementwise minimum over per-root trees") {
    for (std::uint64_t seed : {1, 2, 3}) {
        auto g = random_connected(50, 110, seed);
        std::mt19937_64 rng(seed * 77);
        std::vector<int> roots;
        for (int i = 0; i < 5; ++i) roots.push_back(static_cast<int>(rng() % 50));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        auto spf = bfs_spf(g, roots);
        for (int v = 0; v < 50; ++v) {
            int best = kUnreachable;
            for (int r : roots) best = std::min(best, bfs_spt(g, r).dist[v]);
            CHECK(spf.dist[v] == best);
        }
    }
}

TEST_CASE("metrics on fixtures") {
    auto c5 = cycle(5);
    auto m = metrics(c5);
    CHECK(m.diameter == 2);
    CHECK(m.radius == 2);

    auto k13 = star(4);
    m = metrics(k13);
    CHECK(m.diameter == 2);
    CHECK(m.radius == 1);
    CHECK(m.center == 0);

    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_AS(metrics(disconnected), InfeasibleError);
}

TEST_CASE("figure-3 reduction graph has diameter 2 and max BFS depth 2") {
    SetCoverInstance sc;
    sc.universe_size = 2;
    sc.sets = {{0}, {1}, {0, 1}};
    auto art = sc_to_mal2(sc);
    CHECK(art.graph.num_vertices() == 14);
    auto m = metrics(art.graph);
    CHECK(m.diameter == 2);
    // root t2 sits two hops from everything (independent BFS)
    int t2 = -1;
    for (int v = 0; v < art.graph.num_vertices(); ++v)
        if (art.roles[v] == "t_2") t2 = v;
    REQUIRE(t2 >= 0);
    auto dist = testutil::naive_bfs_dist(art.graph, t2);
    CHECK(*std::max_element(dist.begin(), dist.end()) == 2);
}

TEST_CASE("radius-diameter sandwich and relabeling invariance on random graphs") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 25; ++it) {
        int n = 2 + static_cast<int>(rng() % 60);
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        long long m = (n - 1) + (max_m > n - 1 ? static_cast<long long>(rng() % (max_m - n + 2)) : 0);
        auto g = random_connected(n, m, rng());
        auto met = metrics(g);
        CHECK(met.radius <= met.diameter);
        CHECK(met.diameter <= 2 * met.radius);

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        auto met2 = metrics(h);
        CHECK(met.diameter == met2.diameter);
        CHECK(met.radius == met2.radius);
    }
}

TEST_CASE("graph text format round-trips bit-exactly") {
    auto g = random_connected(17, 40, 5);
    auto text = write_graph(g);
    auto g2 = parse_graph(text);
    CHECK(write_graph(g2) == text);

    auto commented = "# a comment\n\n" + text;
    CHECK(write_graph(parse_graph(commented)) == text);

    Graph dg(3, true);
    dg.add_edge(2, 0);
    dg.add_edge(0, 2);
    auto dtext = write_graph(dg);
    CHECK(dtext.find("directed") != std::string::npos);
    auto dg2 = parse_graph(dtext);
    CHECK(dg2.directed());
    CHECK(write_graph(dg2) == dtext);

    CHECK_THROWS_AS(parse_graph("1 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("not a header\n"), ParseError);
}

TEST_CASE("c4 detection") {
    CHECK(has_c4(cycle(4)));
    CHECK(has_c4(complete(4)));
    CHECK_FALSE(has_c4(path(5)));
    CHECK_FALSE(has_c4(star(5)));
    CHECK_FALSE(has_c4(cycle(5)));
    CHECK(has_c4(complete(5)));
}
