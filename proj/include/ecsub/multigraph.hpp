#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ecsub {

/// Undirected multigraph on vertices 0..n-1. Parallel edges are allowed and
/// kept as individual entries; self-loops are rejected. Edge ids are the
/// positions in the edge list and are stable for the lifetime of the graph.
/// Immutable after construction, so instances can be shared freely.
class Multigraph {
public:
    struct Edge {
        int u = 0;
        int v = 0;
    };

    struct Incidence {
        int neighbor = 0;
        int edge = 0;
    };

    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Incidences at v in edge-id order.
    const std::vector<Incidence>& incident(int v) const { return adj_[static_cast<size_t>(v)]; }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    int max_degree() const;

    /// Number of parallel edges between u and v.
    int multiplicity(int u, int v) const;
    int max_multiplicity() const;

    /// Largest edge count over all induced 3-vertex subgraphs; 0 when the
    /// graph has fewer than 3 vertices.
    int max_triangle_density() const;

    /// Smallest vertex triple whose pairwise multiplicities are all >= c.
    std::optional<std::array<int, 3>> contains_ck3(int c) const;

    /// Smallest vertex triple with pairwise multiplicities >= c and at least
    /// one pair >= c+1.
    std::optional<std::array<int, 3>> contains_ck3_plus_e(int c) const;

    /// True when every vertex is reachable from vertex 0 (single component).
    bool connected() const;

    /// Connected components as vertex lists, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
};

enum class Family {
    c_k3,         // triangle, every pair c-fold
    c_k3_plus_e,  // c_k3 with one extra parallel edge on the first pair
    c_k3_minus_e, // c_k3 with one edge removed from the last pair
    joined_twins, // two copies of c_k3_plus_e, low-degree apexes joined
    petersen,
};

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

/// Canonical named instance. The parameter c is ignored for petersen.
Multigraph generate(Family family, int c);

/// Edge-induced subgraph with dense renumbering and maps back to the host.
struct Subgraph {
    Multigraph graph;
    std::vector<int> vertex_to_host; // subgraph vertex -> host vertex
    std::vector<int> edge_to_host;   // subgraph edge id -> host edge id
};

Subgraph make_subgraph(const Multigraph& g, const std::vector<int>& edge_ids);

/// Small xorshift-style generator so instance sampling is identical on every
/// platform (std::uniform_int_distribution is not portable).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform-ish value in [0, bound); bound > 0.
    int below(int bound);

private:
    std::uint64_t state_;
};

/// Random multigraph with at most `edge_target` edges, no self-loops and all
/// degrees <= max_degree_cap. Used by the test corpora; deterministic in rng.
Multigraph random_multigraph(int vertex_count, int edge_target, int max_degree_cap, SplitMix64& rng);

} // namespace ecsub
