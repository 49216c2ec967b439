#include "ecsub/multigraph.hpp"

#include <doctest.h>

#include <stdexcept>

#include <numeric>

using namespace ecsub;

TEST_CASE("generators produce the documented shapes") {
    Multigraph two_k3 = generate(Family::c_k3, 2);
    CHECK(two_k3.vertex_count() == 3);
    CHECK(two_k3.edge_count() == 6);
    CHECK(two_k3.max_degree() == 4);
    CHECK(two_k3.max_triangle_density() == 6);

    Multigraph k3e = generate(Family::c_k3_plus_e, 1);
    CHECK(k3e.edge_count() == 4);
    CHECK(k3e.max_degree() == 3);
    CHECK(k3e.max_triangle_density() == 4);

    Multigraph minus = generate(Family::c_k3_minus_e, 2);
    CHECK(minus.edge_count() == 5);
    CHECK(minus.max_degree() == 4);

    // Two 7-edge copies of 2K3+e plus the joining edge; both apexes reach
    // degree 5, so the graph is 5-regular with 15 edges.
    Multigraph twins = generate(Family::joined_twins, 2);
    CHECK(twins.vertex_count() == 6);
    CHECK(twins.edge_count() == 15);
    CHECK(twins.max_degree() == 5);
    for (int v = 0; v < twins.vertex_count(); ++v) CHECK(twins.degree(v) == 5);

    Multigraph pet = generate(Family::petersen, 1);
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.max_degree() == 3);
    for (int v = 0; v < pet.vertex_count(); ++v) CHECK(pet.degree(v) == 3);
    CHECK(pet.max_triangle_density() == 2);
}

TEST_CASE("generator invariants across parameters") {
    for (int c = 1; c <= 4; ++c) {
        Multigraph g = generate(Family::c_k3, c);
        CHECK(g.edge_count() == 3 * c);
        CHECK(g.max_degree() == 2 * c);
        CHECK(g.max_triangle_density() == 3 * c);
        Multigraph ge = generate(Family::c_k3_plus_e, c);
        CHECK(ge.edge_count() == 3 * c + 1);
        CHECK(ge.max_degree() == 2 * c + 1);
    }
    CHECK_THROWS_AS(generate(Family::c_k3, 0), std::invalid_argument);
}

TEST_CASE("degrees, density, simple queries") {
    // Simple path on 4 vertices.
    Multigraph path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(path.max_degree() == 2);
    CHECK(path.max_triangle_density() == 2);
    CHECK(path.multiplicity(1, 2) == 1);
    CHECK(path.multiplicity(0, 3) == 0);

    Multigraph single(2, {{0, 1}});
    CHECK(single.max_degree() == 1);
    CHECK(single.max_triangle_density() == 0); // fewer than 3 vertices

    CHECK_THROWS_AS(Multigraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("triple detectors agree with the definition") {
    Multigraph two_k3 = generate(Family::c_k3, 2);
    CHECK(two_k3.contains_ck3(2).has_value());
    CHECK(two_k3.contains_ck3_plus_e(1).has_value()); // every pair has 2 >= 2

    Multigraph minus = generate(Family::c_k3_minus_e, 2);
    CHECK_FALSE(minus.contains_ck3(2).has_value());

    Multigraph k3e = generate(Family::c_k3_plus_e, 1);
    CHECK(k3e.contains_ck3(1).has_value());
    CHECK(k3e.contains_ck3_plus_e(1).has_value());

    Multigraph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_FALSE(k3.contains_ck3_plus_e(1).has_value());
}

namespace {

// Independent brute force over vertex triples.
bool brute_ck3(const Multigraph& g, int c) {
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b)
            for (int d = b + 1; d < g.vertex_count(); ++d)
                if (g.multiplicity(a, b) >= c && g.multiplicity(a, d) >= c && g.multiplicity(b, d) >= c) return true;
    return false;
}

} // namespace

TEST_CASE("contains_ck3 matches brute force on random instances") {
    SplitMix64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + rng.below(6); // up to 8 vertices
        Multigraph g = random_multigraph(n, 4 + rng.below(10), 8, rng);
        for (int c = 1; c <= 3; ++c) CHECK(g.contains_ck3(c).has_value() == brute_ck3(g, c));
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    SplitMix64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = random_multigraph(2 + rng.below(6), rng.below(13), 8, rng);
        long long total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2LL * g.edge_count());
    }
}

TEST_CASE("subgraph extraction keeps maps consistent") {
    Multigraph twins = generate(Family::joined_twins, 2);
    Subgraph sub = make_subgraph(twins, {0, 1, 2, 14});
    CHECK(sub.graph.edge_count() == 4);
    for (int e = 0; e < sub.graph.edge_count(); ++e) {
        const Multigraph::Edge& host = twins.edge(sub.edge_to_host[static_cast<size_t>(e)]);
        const Multigraph::Edge& local = sub.graph.edge(e);
        CHECK(sub.vertex_to_host[static_cast<size_t>(local.u)] == host.u);
        CHECK(sub.vertex_to_host[static_cast<size_t>(local.v)] == host.v);
    }
}
