#include <catch2/catch_amalgamated.hpp>

#include "mal/exact.hpp"
#include "test_util.hpp"

using namespace mal;

TEST_CASE("exact_mal reproduces the figure-1 star") {
    auto g = star(4);
    auto at3 = exact_mal(g, 3);
    CHECK(at3.total_labels() == 5);
    CHECK(is_temporally_connected({g, at3}, 3).connected);

    auto at2 = exact_mal(g, 2);
    CHECK(at2.total_labels() == 6);
    CHECK(is_temporally_connected({g, at2}, 2).connected);
}

TEST_CASE("exact_mal tiny fixtures and errors") {
    CHECK(exact_mal(complete(2), 1).total_labels() == 1);
    CHECK(exact_mal(complete(1), 1).total_labels() == 0);

    CHECK_THROWS_AS(exact_mal(path(3), 1), InfeasibleError);  // a < D
    Graph disconnected(3);
    disconnected.add_edge(0, 1);
    CHECK_THROWS_AS(exact_mal(disconnected, 2), InfeasibleError);

    ExactBudget tight;
    tight.max_edge_label_slots = 4;
    CHECK_THROWS_AS(exact_mal(star(4), 2, tight), BudgetExceededError);
    tight.max_edge_label_slots = 0;
    CHECK_THROWS_AS(exact_mal(star(4), 2, tight), std::invalid_argument);
}

TEST_CASE("exact_mal optimum never increases with the age budget") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& g : testutil::connected_graphs_up_to_iso(n)) {
            const int d = metrics(g).diameter;
            long long prev = -1;
            for (int a = d; a <= 2 * d + 2; ++a) {
                auto opt = exact_mal(g, a).total_labels();
                if (prev >= 0) CHECK(opt <= prev);
                prev = opt;
            }
        }
    }
}

TEST_CASE("exact_mal lower bounds at a = 2D+2 on all 4-vertex graphs") {
    for (const auto& g : testutil::connected_graphs_up_to_iso(4)) {
        const int n = g.num_vertices();
        const int a = 2 * metrics(g).diameter + 2;
        auto opt = exact_mal(g, a).total_labels();
        CHECK(opt >= 2 * n - 4);
        if (!has_c4(g)) CHECK(opt >= 2 * n - 3);
    }
}

TEST_CASE("exact_dcss fixtures") {
    CHECK(exact_dcss(cycle(4), 2).num_edges() == 4);
    CHECK(exact_dcss(complete(4), 2).num_edges() == 3);

    auto p5 = path(5);
    auto h = exact_dcss(p5, metrics(p5).diameter);
    CHECK(h.num_edges() == 4);

    auto t = star(6);
    CHECK(exact_dcss(t, metrics(t).diameter).num_edges() == 5);

    CHECK_THROWS_AS(exact_dcss(path(4), 2), InfeasibleError);
    ExactBudget tight;
    tight.max_edges = 3;
    CHECK_THROWS_AS(exact_dcss(complete(4), 2, tight), BudgetExceededError);
}

TEST_CASE("exact_dcss solutions are valid and never cost more than exact_mal") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 6; ++it) {
        int n = 4 + static_cast<int>(rng() % 2);
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        auto g = random_connected(n, n - 1 + static_cast<long long>(rng() % (max_m - n + 2)), rng());
        const int d = metrics(g).diameter;
        auto h = exact_dcss(g, d);
        CHECK(metrics(h).diameter <= d);
        for (const auto& [u, v] : h.edges()) CHECK(g.has_edge(u, v));
        // Lemma-1(ii) transfer: any feasible labeling supports a subgraph.
        CHECK(h.num_edges() <= exact_mal(g, d).total_labels());
    }
}
