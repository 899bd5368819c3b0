#include <catch2/catch_amalgamated.hpp>

#include "mal/approx.hpp"
#include "mal/exact.hpp"
#include "test_util.hpp"

using namespace mal;

TEST_CASE("label_trivial fixtures") {
    auto k2 = complete(2);
    auto l2 = label_trivial(k2);
    CHECK(l2.total_labels() == 1);
    CHECK(l2.labels(k2.key(0, 1)) == std::vector<int>{1});

    auto k13 = star(4);
    auto ls = label_trivial(k13);
    CHECK(ls.total_labels() == 6);
    CHECK(ls.lifetime() == 2);
    CHECK(is_temporally_connected({k13, ls}, 2).connected);

    auto p3 = path(3);
    auto lp = label_trivial(p3);
    CHECK(lp.labels(p3.key(0, 1)) == std::vector<int>{1, 2});
    CHECK(lp.labels(p3.key(1, 2)) == std::vector<int>{1, 2});
    CHECK(lp.total_labels() == 4);
}

TEST_CASE("label_trivial bounds on random graphs") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 10; ++it) {
        int n = 2 + static_cast<int>(rng() % 60);
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        auto g = random_connected(n, n - 1 + static_cast<long long>(rng() % (max_m - n + 2)), rng());
        auto lambda = label_trivial(g);
        const int d = metrics(g).diameter;
        CHECK(lambda.total_labels() <= static_cast<long long>(n) * (n - 1));
        CHECK(lambda.lifetime() <= d);
        CHECK(is_temporally_connected({g, lambda}, d).connected);
    }
}

TEST_CASE("label_3half fixtures") {
    auto k13 = star(4);
    auto ls = label_3half(k13);
    CHECK(ls.lifetime() <= 3);  // ceil(3/2 * 2)
    CHECK(is_temporally_connected({k13, ls}, 3).connected);

    auto c6 = cycle(6);
    auto lc = label_3half(c6);
    CHECK(lc.lifetime() <= 5);  // ceil(3/2 * 3)
    CHECK(is_temporally_connected({c6, lc}, 5).connected);

    auto k2 = complete(2);
    auto l2 = label_3half(k2);
    CHECK(l2.lifetime() <= 2);
    CHECK(is_temporally_connected({k2, l2}, 2).connected);
}

TEST_CASE("label_5thirds fixtures") {
    auto k2 = complete(2);
    auto l2 = label_5thirds(k2);
    // B = 0 degenerate case: the pairwise phase alone labels the edge {1}.
    CHECK(l2.total_labels() == 1);
    CHECK(l2.lifetime() == 1);
    CHECK(is_temporally_connected({k2, l2}, 2).connected);

    auto p4 = path(4);
    auto lp = label_5thirds(p4);
    CHECK(lp.lifetime() <= 5);  // ceil(5/3 * 3)
    CHECK(is_temporally_connected({p4, lp}, 5).connected);

    auto k5 = complete(5);
    auto lk = label_5thirds(k5);
    CHECK(lk.lifetime() <= 2);  // ceil(5/3 * 1)
    CHECK(is_temporally_connected({k5, lk}, 2).connected);
}

TEST_CASE("theorem-11 bounds on random graphs") {
    std::mt19937_64 rng(2718);
    for (int it = 0; it < 12; ++it) {
        int n = 8 + static_cast<int>(rng() % 113);
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        auto g = random_connected(n, n - 1 + static_cast<long long>(rng() % (max_m - n + 2)), rng());
        const int d = metrics(g).diameter;

        auto three = label_3half(g);
        const int age3 = (3 * d + 1) / 2;
        CHECK(three.lifetime() <= age3);
        CHECK(is_temporally_connected({g, three}, age3).connected);
        auto pair3 = dominating_set_pair(g, {1, 2}, n2_for_3half(n));
        const auto& s3 = pair3.satisfied == 1 ? pair3.s1 : pair3.s2;
        CHECK(three.total_labels() <=
              static_cast<long long>(s3.size() + 1) * (n - 1));
        if (pair3.satisfied == 1)
            CHECK(static_cast<long long>(s3.size()) <= hitting_set_size_bound(n, pair3.n2, n));
        else
            CHECK(static_cast<int>(s3.size()) <= pair3.n2);

        auto five = label_5thirds(g);
        const int age5 = (5 * d + 2) / 3;
        CHECK(five.lifetime() <= age5);
        CHECK(is_temporally_connected({g, five}, age5).connected);
        auto pair5 = dominating_set_pair(g, {1, 3}, n2_for_5thirds(n, d));
        if (pair5.satisfied == 2) {
            CHECK(five.total_labels() <=
                  static_cast<long long>(pair5.s2.size() + 1) * (n - 1));
        } else {
            const long long s1 = static_cast<long long>(pair5.s1.size());
            CHECK(five.total_labels() <= 2LL * (n - 1) + static_cast<long long>(d) * s1 * (s1 - 1));
        }
    }
}

TEST_CASE("approximations stay above the exact optimum on tiny graphs") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& g : testutil::connected_graphs_up_to_iso(n)) {
            const int d = metrics(g).diameter;
            const int a = (5 * d + 2) / 3;
            auto opt = exact_mal(g, a).total_labels();
            for (const auto& lambda : {label_trivial(g), label_3half(g), label_5thirds(g)}) {
                CHECK(lambda.total_labels() >= opt);
                CHECK(is_temporally_connected({g, lambda}, a).connected);
            }
        }
    }
}
