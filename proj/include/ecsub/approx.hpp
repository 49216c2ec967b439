#pragma once

#include "ecsub/bounds.hpp"
#include "ecsub/coloring.hpp"
#include "ecsub/engine.hpp"
#include "ecsub/multigraph.hpp"

#include <string>
#include <vector>

namespace ecsub {

/// Components of the k-matching that must be colored directly: the two
/// 3-vertex graphs on which the k-palette guarantee collapses to k edges.
enum class ComponentClass {
    special_even, // (k/2)K3 for even k
    special_odd,  // ((k-1)/2)K3+e for odd k
    generic,
};

std::string class_name(ComponentClass c);

/// Classification by the pair-multiplicity profile; comp must be connected.
ComponentClass classify_component(const Multigraph& comp, int k);

struct ApproxComponent {
    std::vector<int> vertices; // host vertices, sorted
    std::vector<int> edges;    // host edge ids, sorted
    ComponentClass cls = ComponentClass::generic;
    int colored = 0;
    bool uncertified = false; // the engine gave up on this component's bound
};

struct ApproxResult {
    std::vector<int> k_matching;          // selected edge ids, sorted
    std::vector<ApproxComponent> components;
    PartialColoring final_coloring;       // palette k, colors only matching edges
    Rational guaranteed_fraction{1, 1};   // min over components of colored/|E|
};

/// Maximum k-ECS pipeline: take a maximum k-matching, color each special
/// component to its optimum of k edges directly, and run the full coloring
/// pipeline on everything else with palette k.
ApproxResult approximate_kecs(const Multigraph& g, int k, const EngineOptions& options = {});

} // namespace ecsub
