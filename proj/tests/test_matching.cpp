#include "ecsub/matching.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace ecsub;

namespace {

int matching_size(const std::vector<int>& mates) {
    int count = 0;
    for (size_t v = 0; v < mates.size(); ++v)
        if (mates[v] >= 0 && mates[v] > static_cast<int>(v)) ++count;
    return count;
}

// Exhaustive maximum k-matching by subset enumeration.
int brute_max_k_matching(const Multigraph& g, int k) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
        std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
        bool ok = true;
        int size = 0;
        for (int e = 0; ok && e < g.edge_count(); ++e) {
            if (!(mask >> e & 1)) continue;
            ++size;
            if (++deg[static_cast<size_t>(g.edge(e).u)] > k) ok = false;
            if (++deg[static_cast<size_t>(g.edge(e).v)] > k) ok = false;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

} // namespace

TEST_CASE("blossom matcher on classic shapes") {
    SUBCASE("triangle plus tail needs the blossom step") {
        // 0-1-2 triangle, tail 2-3; maximum matching has 2 edges.
        std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
        CHECK(matching_size(maximum_matching_mates(4, edges)) == 2);
    }
    SUBCASE("odd cycle") {
        std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
        CHECK(matching_size(maximum_matching_mates(5, edges)) == 2);
    }
    SUBCASE("two blossoms joined") {
        // Two triangles joined by a bridge: perfect matching of size 3.
        std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}};
        CHECK(matching_size(maximum_matching_mates(6, edges)) == 3);
    }
}

TEST_CASE("k-matching on the documented examples") {
    SUBCASE("star with a degree cap") {
        Multigraph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
        CHECK(max_k_matching(star, 2).size() == 2);
    }
    SUBCASE("2K3 already satisfies the cap") {
        Multigraph g = generate(Family::c_k3, 2);
        CHECK(max_k_matching(g, 4).size() == 6);
    }
    SUBCASE("5-cycle at k=1 is a plain matching") {
        Multigraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        CHECK(max_k_matching(c5, 1).size() == 2);
    }
}

TEST_CASE("k-matching agrees with brute force and respects degrees") {
    SplitMix64 rng(10101);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = random_multigraph(2 + rng.below(5), rng.below(11), 8, rng);
        int k = 1 + rng.below(4);
        std::vector<int> f = max_k_matching(g, k);
        CHECK(std::is_sorted(f.begin(), f.end()));
        std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
        for (int e : f) {
            ++deg[static_cast<size_t>(g.edge(e).u)];
            ++deg[static_cast<size_t>(g.edge(e).v)];
        }
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(deg[static_cast<size_t>(v)] <= k);
        CHECK(static_cast<int>(f.size()) == brute_max_k_matching(g, k));
    }
}

TEST_CASE("k-matching is deterministic") {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        Multigraph g = random_multigraph(3 + rng.below(4), 2 + rng.below(10), 6, rng);
        CHECK(max_k_matching(g, 2) == max_k_matching(g, 2));
    }
    CHECK_THROWS_AS(max_k_matching(Multigraph(1, {}), 0), std::invalid_argument);
}
