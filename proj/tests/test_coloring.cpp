#include "ecsub/coloring.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace ecsub;

TEST_CASE("free colors complement the incident colors") {
    Multigraph k3e = generate(Family::c_k3_plus_e, 1); // edges: (0,1),(0,2),(1,2),(0,1)
    PartialColoring col(k3e.edge_count(), 3);
    SUBCASE("empty coloring leaves the whole palette") {
        for (int v = 0; v < 3; ++v) CHECK(free_colors(k3e, col, v) == ColorSet::full(3));
    }
    SUBCASE("the two single edges colored 1 and 2 leave {3} at the apex") {
        col.set(1, 1); // (0,2)
        col.set(2, 2); // (1,2)
        CHECK(free_colors(k3e, col, 2).to_vector() == std::vector<int>{3});
    }
    CHECK_THROWS_AS(free_colors(k3e, col, 5), std::invalid_argument);
}

TEST_CASE("a saturated vertex has no free colors") {
    Multigraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    PartialColoring col(3, 3);
    col.set(0, 1);
    col.set(1, 2);
    col.set(2, 3);
    CHECK(free_colors(star, col, 0).empty());
}

TEST_CASE("free components") {
    Multigraph two_k3 = generate(Family::c_k3, 2);
    SUBCASE("empty coloring gives the components of the graph") {
        PartialColoring col(6, 4);
        auto comps = free_components(two_k3, col);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].vertices == std::vector<int>{0, 1, 2});
        CHECK(comps[0].edge_size() == 6);
    }
    SUBCASE("one uncolored edge leaves one nontrivial component") {
        PartialColoring col(6, 4);
        col.set(0, 1);
        col.set(1, 2);
        col.set(2, 3);
        col.set(3, 4);
        // edges 4,5 (pair 1-2) stay uncolored; vertex 0 is saturated
        auto comps = free_components(two_k3, col);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].vertices == std::vector<int>{1, 2});
        CHECK(comps[0].edges == std::vector<int>{4, 5});
        CHECK_FALSE(comps[0].trivial());
    }
    SUBCASE("fully colored and saturated gives nothing") {
        Multigraph pair(2, {{0, 1}});
        PartialColoring col(1, 1);
        col.set(0, 1);
        CHECK(free_components(pair, col).empty());
    }
    SUBCASE("trivial components are materialized") {
        Multigraph pair(2, {{0, 1}});
        PartialColoring col(1, 2);
        col.set(0, 1);
        auto comps = free_components(pair, col);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].trivial());
        CHECK(comps[1].trivial());
    }
}

TEST_CASE("potential ordering") {
    Multigraph two_k3 = generate(Family::c_k3, 2); // palette 4, cap 2

    SUBCASE("tuple compares colored count first, then large components") {
        Potential a{5, 2, {0, 1}, false}; // (5 | n2=1, n1=0)
        Potential b{5, 2, {2, 0}, false}; // (5 | n2=0, n1=2)
        CHECK(a > b);
        Potential c{6, 2, {0, 0}, false};
        CHECK(c > a);
    }
    SUBCASE("merging two singles into a double raises the potential") {
        Potential before{4, 2, {2, 0}, false};
        Potential after{4, 2, {0, 1}, false};
        CHECK(after > before);
    }
    SUBCASE("oversized components rank below everything else") {
        Potential oversized{6, 2, {0, 0}, true};
        Potential small{2, 2, {1, 0}, false};
        CHECK(small > oversized);
    }
    SUBCASE("computed from a coloring") {
        PartialColoring col(6, 4);
        Potential psi = potential(two_k3, col);
        CHECK(psi.colored == 0);
        CHECK(psi.oversized); // all six edges uncolored in one component
        col.set(0, 1);
        col.set(1, 2);
        col.set(2, 3);
        col.set(3, 4);
        psi = potential(two_k3, col);
        CHECK(psi.colored == 4);
        CHECK_FALSE(psi.oversized);
        CHECK(psi.counts == std::vector<int>{0, 1}); // one 2-edge component
    }
}

TEST_CASE("sizes in the potential account for every edge") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        Multigraph g = random_multigraph(2 + rng.below(5), rng.below(12), 8, rng);
        int k = std::max(1, g.max_degree());
        PartialColoring col(g.edge_count(), k);
        // color a random prefix properly
        for (int e = 0; e < g.edge_count(); ++e) {
            if (rng.below(2) == 0) continue;
            ColorSet common = free_colors(g, col, g.edge(e).u).intersect(free_colors(g, col, g.edge(e).v));
            if (!common.empty()) col.set(e, common.lowest());
        }
        long long covered = col.colored_count();
        for (const FreeComponent& q : free_components(g, col)) covered += q.edge_size();
        CHECK(covered == g.edge_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            ColorSet free = free_colors(g, col, v);
            int used = 0;
            for (const Multigraph::Incidence& inc : g.incident(v))
                if (col.is_colored(inc.edge)) ++used;
            CHECK(free.count() + used == k);
        }
    }
}

TEST_CASE("validate flags the documented violations") {
    Multigraph path(3, {{0, 1}, {1, 2}});
    PartialColoring col(2, 2);
    SUBCASE("proper coloring passes") {
        col.set(0, 1);
        col.set(1, 2);
        CHECK(validate(path, col).empty());
    }
    SUBCASE("two incident edges with one color") {
        col.set(0, 1);
        col.set(1, 1);
        auto violations = validate(path, col);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == ColoringViolation::Kind::improper);
        CHECK(violations[0].edge_a == 0);
        CHECK(violations[0].edge_b == 1);
    }
    SUBCASE("color beyond the palette") {
        PartialColoring bad(2, 2);
        CHECK_THROWS_AS(bad.set(0, 3), std::invalid_argument);
    }
    SUBCASE("size mismatch is reported") {
        PartialColoring small(1, 2);
        auto violations = validate(path, small);
        REQUIRE(violations.size() == 1);
        CHECK(violations[0].kind == ColoringViolation::Kind::size_mismatch);
    }
}
