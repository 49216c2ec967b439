#pragma once

#include "ecsub/coloring.hpp"
#include "ecsub/multigraph.hpp"

#include <stdexcept>

namespace ecsub {

struct NodeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    int opt = 0;              // maximum edges colorable with k colors
    PartialColoring witness;  // a proper coloring achieving opt
    long long nodes = 0;      // search nodes visited
};

/// Exact maximum k-edge-colorable subgraph by depth-first branch and bound.
/// Each edge either takes a color consistent with its neighbors or is
/// dropped. Symmetry is cut by only ever opening one fresh color and by
/// forcing dropped parallel copies to the end of their bundle; pruning uses
/// per-vertex capacity and a per-triple cap of k colored edges. Deterministic;
/// throws NodeCapExceeded when the node budget runs out before optimality is
/// proved. Intended for desk-size instances.
OracleResult exact_max_kecs(const Multigraph& g, int k, long long node_cap = 10'000'000);

} // namespace ecsub
