#pragma once

#include "ecsub/coloring.hpp"
#include "ecsub/multigraph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ecsub {

/// One contraction of a 3-vertex subgraph H into a single vertex h. Holds
/// everything needed to rebuild a coloring of the pre-collapse graph, so a
/// record chain can be replayed in reverse without the intermediate graphs.
struct CollapseRecord {
    struct InternalEdge {
        int id;     // edge id in the pre-collapse graph
        int u, v;   // endpoints, both in the triple
    };
    struct BoundaryEdge {
        int prev_id;  // edge id in the pre-collapse graph
        int new_id;   // edge id in the collapsed graph
        int inside;   // the triple endpoint
        int outside;  // the other endpoint (pre-collapse numbering)
    };

    std::array<int, 3> triple{};        // collapsed vertices, ascending
    std::vector<InternalEdge> internal; // edges inside the triple
    std::vector<BoundaryEdge> boundary;
    int new_vertex = -1;                 // h in the collapsed numbering
    std::vector<int> vertex_map;         // pre-collapse vertex -> collapsed vertex
    std::vector<int> edge_map;           // collapsed edge id -> pre-collapse edge id
    int prev_vertex_count = 0;
    int prev_edge_count = 0;
};

/// Smallest triple H with at most k edges leaving it and, per vertex x, at
/// least as many edges opposite x as leave through x.
std::optional<std::array<int, 3>> find_k_collapsible(const Multigraph& g, int k);

struct CollapseResult {
    Multigraph collapsed;
    std::vector<CollapseRecord> records; // in application order
};

/// Contract k-collapsible triples until none remains.
CollapseResult collapse_all(const Multigraph& g, int k);

/// Rebuild a coloring of the original graph from one of the fully collapsed
/// graph: boundary colors transfer through the id maps, then each record
/// colors internal edges from the colors its triple sends outward plus the
/// palette colors unused there (at least min(palette, |internal|) per record).
/// Throws std::invalid_argument when `col` is not proper on `collapsed`.
PartialColoring lift_coloring(const Multigraph& collapsed, const std::vector<CollapseRecord>& records,
                              const PartialColoring& col);

} // namespace ecsub
