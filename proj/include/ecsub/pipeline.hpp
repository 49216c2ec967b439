#pragma once

#include "ecsub/bounds.hpp"
#include "ecsub/collapse.hpp"
#include "ecsub/engine.hpp"
#include "ecsub/multigraph.hpp"

namespace ecsub {

/// End-to-end coloring run: plan the guarantee, contract collapsible triples,
/// maximize the potential on the contracted graph, lift the coloring back.
struct ColorRun {
    PartialColoring coloring; // of the input graph
    BoundReport report;       // of the input graph
    int palette = 0;
    int required_colored = 0; // ceil(guarantee * m) on the input graph
    bool bound_met = false;
    EngineResult engine;      // run on the collapsed graph
    Multigraph collapsed;
    std::vector<CollapseRecord> records;
};

/// palette <= 0 selects max(1, max degree). The engine run on the contracted
/// graph is held to the input graph's guarantee; contraction never weakens it
/// since every contracted triple has at most t edges.
ColorRun color_graph(const Multigraph& g, int palette = 0, const EngineOptions& options = {});

} // namespace ecsub
