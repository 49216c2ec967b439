#include "ecsub/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace ecsub;

TEST_CASE("oracle on the named instances") {
    CHECK(exact_max_kecs(generate(Family::c_k3_plus_e, 1), 3).opt == 3);
    CHECK(exact_max_kecs(generate(Family::c_k3, 2), 4).opt == 4);
    CHECK(exact_max_kecs(generate(Family::c_k3_plus_e, 2), 5).opt == 5);

    Multigraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(exact_max_kecs(c5, 2).opt == 4); // odd cycle: drop one edge, color the path
}

TEST_CASE("witness achieves the optimum and is proper") {
    SplitMix64 rng(909);
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph g = random_multigraph(2 + rng.below(5), rng.below(11), 8, rng);
        int k = 1 + rng.below(5);
        OracleResult res = exact_max_kecs(g, k);
        CHECK(validate(g, res.witness).empty());
        CHECK(res.witness.colored_count() == res.opt);
        CHECK(res.opt <= g.edge_count());
    }
}

TEST_CASE("three-vertex graphs have the closed form min(m, k)") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        int a = rng.below(4), b = rng.below(4), c = rng.below(4);
        std::vector<Multigraph::Edge> edges;
        for (int i = 0; i < a; ++i) edges.push_back({0, 1});
        for (int i = 0; i < b; ++i) edges.push_back({0, 2});
        for (int i = 0; i < c; ++i) edges.push_back({1, 2});
        Multigraph g(3, std::move(edges));
        int k = 1 + rng.below(7);
        CHECK(exact_max_kecs(g, k).opt == std::min(g.edge_count(), k));
    }
}

TEST_CASE("optimum is monotone in the palette and capped by capacity") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 15; ++trial) {
        Multigraph g = random_multigraph(2 + rng.below(4), 2 + rng.below(9), 8, rng);
        int prev = 0;
        for (int k = 1; k <= 6; ++k) {
            int opt = exact_max_kecs(g, k).opt;
            CHECK(opt >= prev);
            long long cap = 0;
            for (int v = 0; v < g.vertex_count(); ++v) cap += std::min(k, g.degree(v));
            CHECK(opt <= cap / 2);
            prev = opt;
        }
        // With the palette at the Shannon number everything is colorable.
        int delta = g.max_degree();
        if (delta >= 1) CHECK(exact_max_kecs(g, 3 * delta / 2).opt == g.edge_count());
    }
}

TEST_CASE("node cap aborts the search") {
    Multigraph g = generate(Family::joined_twins, 2);
    CHECK_THROWS_AS(exact_max_kecs(g, 5, 3), NodeCapExceeded);
}

TEST_CASE("tight family values used by the guarantees") {
    // c_k((k/2)K3) = k and c_k(((k-1)/2)K3+e) = k.
    for (int k : {4, 6}) CHECK(exact_max_kecs(generate(Family::c_k3, k / 2), k).opt == k);
    for (int k : {5, 7}) CHECK(exact_max_kecs(generate(Family::c_k3_plus_e, (k - 1) / 2), k).opt == k);
}
