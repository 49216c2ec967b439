#include "ecsub/collapse.hpp"

#include "ecsub/engine.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace ecsub;

namespace {

// 2K3 on {0,1,2} with a pendant vertex 3 attached to vertex 0.
Multigraph two_k3_pendant() {
    return Multigraph(4, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}, {1, 2}, {0, 3}});
}

} // namespace

TEST_CASE("find_k_collapsible") {
    SUBCASE("a fat triangle with one boundary edge qualifies") {
        auto triple = find_k_collapsible(two_k3_pendant(), 3);
        REQUIRE(triple.has_value());
        CHECK(*triple == std::array<int, 3>{0, 1, 2});
    }
    SUBCASE("a plain triangle inside K4 fails at k=1") {
        Multigraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        CHECK_FALSE(find_k_collapsible(k4, 1).has_value());
    }
    SUBCASE("an edgeless graph has nothing to collapse") {
        // Two vertices only; no triple exists at all.
        CHECK_FALSE(find_k_collapsible(Multigraph(2, {}), 5).has_value());
    }
}

TEST_CASE("collapse_all") {
    SUBCASE("pendant example contracts to a single edge") {
        CollapseResult res = collapse_all(two_k3_pendant(), 3);
        CHECK(res.collapsed.vertex_count() == 2);
        CHECK(res.collapsed.edge_count() == 1);
        REQUIRE(res.records.size() == 1);
        CHECK(res.records[0].internal.size() == 6);
        CHECK(res.records[0].boundary.size() == 1);
    }
    SUBCASE("a graph without collapsible triples is untouched") {
        Multigraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        CollapseResult res = collapse_all(k4, 1);
        CHECK(res.records.empty());
        CHECK(res.collapsed.edge_count() == 6);
    }
    SUBCASE("a chain of two triangles collapses twice") {
        Multigraph chain(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
        CollapseResult res = collapse_all(chain, 1);
        CHECK(res.records.size() == 2);
        CHECK(res.collapsed.vertex_count() == 2);
        CHECK(res.collapsed.edge_count() == 1);
    }
    SUBCASE("edge counts stay consistent across the record chain") {
        CollapseResult res = collapse_all(generate(Family::joined_twins, 2), 3);
        int internal = 0;
        for (const CollapseRecord& rec : res.records) internal += static_cast<int>(rec.internal.size());
        CHECK(res.collapsed.edge_count() + internal == 15);
    }
}

TEST_CASE("degree and density never grow past the documented caps") {
    SplitMix64 rng(616);
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph g = random_multigraph(3 + rng.below(4), 2 + rng.below(11), 8, rng);
        int delta = g.max_degree();
        if (delta == 0) continue;
        int k = 1 + rng.below(delta);
        CollapseResult res = collapse_all(g, k);
        CHECK(res.collapsed.max_degree() <= std::max(k, delta));
        int cap = std::max(g.max_triangle_density(), delta + k / 2);
        CHECK(res.collapsed.max_triangle_density() <= cap);
    }
}

TEST_CASE("lift_coloring") {
    SUBCASE("empty record list is the identity") {
        Multigraph g(2, {{0, 1}});
        PartialColoring col(1, 2);
        col.set(0, 2);
        PartialColoring lifted = lift_coloring(g, {}, col);
        CHECK(lifted == col);
    }
    SUBCASE("a saturated merge vertex forces palette-many internal edges") {
        CollapseResult res = collapse_all(two_k3_pendant(), 3);
        PartialColoring col(1, 4);
        col.set(0, 1); // the merge vertex has degree 1, so it is saturated
        PartialColoring lifted = lift_coloring(res.collapsed, res.records, col);
        CHECK(validate(two_k3_pendant(), lifted).empty());
        CHECK(lifted.colored_count() >= 5); // boundary edge + min(4, 6) internal
    }
    SUBCASE("small record colors all internal edges when the palette is big") {
        Multigraph tri_pendant(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
        CollapseResult res = collapse_all(tri_pendant, 2);
        REQUIRE(res.records.size() == 1);
        CHECK(res.records[0].internal.size() == 3);
        PartialColoring col(res.collapsed.edge_count(), 5);
        if (res.collapsed.edge_count() > 0) col.set(0, 3);
        PartialColoring lifted = lift_coloring(res.collapsed, res.records, col);
        CHECK(validate(tri_pendant, lifted).empty());
        int internal_colored = 0;
        for (const CollapseRecord::InternalEdge& e : res.records[0].internal)
            if (lifted.is_colored(e.id)) ++internal_colored;
        CHECK(internal_colored == 3); // min(5, 3)
    }
    SUBCASE("improper input is rejected") {
        Multigraph pair(2, {{0, 1}, {0, 1}});
        PartialColoring bad(2, 2);
        bad.set(0, 1);
        bad.set(1, 1);
        CHECK_THROWS_AS(lift_coloring(pair, {}, bad), std::invalid_argument);
    }
}

TEST_CASE("round-trip: collapse, color, lift stays proper and counts add up") {
    SplitMix64 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        // Random base plus a planted fat triangle hanging off one vertex.
        Multigraph base = random_multigraph(2 + rng.below(4), 1 + rng.below(7), 6, rng);
        int n = base.vertex_count();
        std::vector<Multigraph::Edge> edges = base.edges();
        int c = 1 + rng.below(2);
        for (int rep = 0; rep < c; ++rep) {
            edges.push_back({n, n + 1});
            edges.push_back({n, n + 2});
            edges.push_back({n + 1, n + 2});
        }
        edges.push_back({rng.below(n), n});
        Multigraph g(n + 3, std::move(edges));

        int delta = g.max_degree();
        int k_collapse = std::max(1, 2 * (delta / 2) - 1);
        CollapseResult res = collapse_all(g, k_collapse);
        CHECK_FALSE(find_k_collapsible(res.collapsed, k_collapse).has_value());

        int palette = std::max(1, delta);
        EngineResult engine = maximize_potential(res.collapsed, palette);
        PartialColoring lifted = lift_coloring(res.collapsed, res.records, engine.coloring);
        CHECK(validate(g, lifted).empty());

        // Lift keeps every boundary color and adds min(palette, internal).
        int expected = engine.coloring.colored_count();
        for (auto it = res.records.rbegin(); it != res.records.rend(); ++it)
            expected += std::min(palette, static_cast<int>(it->internal.size()));
        CHECK(lifted.colored_count() >= expected);
    }
}
