#pragma once

#include "ecsub/multigraph.hpp"

#include <utility>
#include <vector>

namespace ecsub {

/// Maximum cardinality matching in a general graph (Edmonds' blossom
/// contraction, O(V^3)). Returns the mate of each vertex, -1 if single.
/// Deterministic: vertices are scanned in index order and neighbors in the
/// order the edge list provides.
std::vector<int> maximum_matching_mates(int n, const std::vector<std::pair<int, int>>& edges);

/// Maximum k-matching: an edge set of maximum size whose degrees stay <= k.
/// Reduction to matching: vertex v becomes min(k, deg v) ports, edge uv a
/// two-node link; a maximum matching leaves uv's link edge unmatched exactly
/// when uv is selected. Returns sorted edge ids.
std::vector<int> max_k_matching(const Multigraph& g, int k);

} // namespace ecsub
