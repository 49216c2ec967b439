#pragma once

#include "ecsub/bounds.hpp"
#include "ecsub/coloring.hpp"
#include "ecsub/multigraph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecsub {

/// Seed coloring: every edge takes the least color free at both endpoints,
/// edges in id order. Afterwards no edge can be colored without recoloring.
PartialColoring greedy_color(const Multigraph& g, int palette);

/// Swap colors a and b on the component of the {a,b}-subgraph containing
/// start (a maximal alternating path or cycle). Properness and the potential
/// are preserved; applying the same swap twice restores the coloring.
PartialColoring kempe_swap(const Multigraph& g, const PartialColoring& col, int start, int a, int b);

/// Color edge e directly if some color is free at both endpoints, otherwise
/// try every (a,b) with a free at one endpoint and b at the other and swap
/// the alternating path; if it misses the far endpoint, e becomes colorable.
/// Empty result means no single swap colors e.
std::optional<PartialColoring> try_augment(const Multigraph& g, const PartialColoring& col, int e);

/// One recoloring step of a free component: uncolor the edge `uncolor_edge`
/// (incident to the component, colored `color`) and give that color to the
/// component edge `color_edge`. Keeps the number of uncolored edges fixed.
struct Shift {
    int uncolor_edge = -1;
    int color_edge = -1;
    int color = 0;
};

/// Net effect of a sequence of shifts applied to one component.
struct ElementaryMove {
    FreeComponent before;
    std::vector<int> uncolored;                   // ids that lost their color
    std::vector<std::pair<int, int>> colored;     // ids that gained (id, color)
    std::vector<std::pair<int, int>> recolored;   // ids whose color changed
    PartialColoring result;
};

/// All distinct moves reachable from `comp` by at most `budget` single shifts,
/// deduplicated by resulting coloring. The identity move comes first.
std::vector<ElementaryMove> enumerate_elementary_moves(const Multigraph& g, const PartialColoring& col,
                                                       const FreeComponent& comp, int budget,
                                                       long long state_cap = 100000);

enum class Check { c1_shared_free_color, c2_component_size, c3_seeing_pair, c4_reach_free_color, c5_improving_move };

std::string check_name(Check c);

struct CertViolation {
    Check check;
    std::string detail;
    std::vector<int> component_vertices;
    std::vector<int> component_edges;
    std::vector<int> other_component_edges; // the seen component (c3)
    int vertex_a = -1;
    int vertex_b = -1;
    int color = -1;
    int edge = -1;
    std::optional<Shift> shift_a; // how vertex_a was reached (c4), if not already in the component
    std::optional<Shift> shift_b;
    std::optional<PartialColoring> improvement; // state to adopt (c5)
};

struct Certification {
    bool pass = true;
    std::vector<CertViolation> violations;
    bool search_exhausted = false; // state cap hit before the shift budget was covered
};

/// Structural checks a locally optimal coloring must satisfy:
///   c1  vertices of one free component have pairwise disjoint free colors
///   c2  a component with q edges has >= 2q free colors and q <= palette/2
///   c3  a component seeing another has free colors disjoint from it
///   c4  vertices reachable by one shift have pairwise disjoint free colors
///   c5  no shift sequence within budget raises the potential or unlocks an
///       augmenting swap
Certification certify(const Multigraph& g, const PartialColoring& col, int budget, long long state_cap = 100000);

/// Scripted countermeasure for one violation; present result has strictly
/// larger potential. Empty result = the script did not apply (caller widens
/// the search instead).
std::optional<PartialColoring> repair(const Multigraph& g, const PartialColoring& col, const CertViolation& violation);

struct EngineOptions {
    int budget = -1;              // shift sequence length; default 2*(palette/2)
    long long state_cap = 100000; // visited-state cap per component search
    int max_escalations = 4;      // budget doublings before giving up
    std::ostream* diag = nullptr; // one line per potential increase
    /// Fraction of edges the run must color before it may stop; defaults to
    /// the strongest guarantee for the graph itself. Callers coloring a
    /// contracted graph pass the host graph's guarantee here.
    std::optional<Rational> target_fraction;
};

struct EngineResult {
    PartialColoring coloring;
    Certification certification;
    BoundReport report;     // guarantee context for the input graph
    int required_colored = 0; // bound the run had to meet (0 when palette < delta)
    bool uncertified = false;
    int escalations = 0;
    int final_budget = 0;
};

/// Drive a partial coloring to a certified local maximum of the potential:
/// exhaust augmenting swaps, check c1..c5, apply scripted repairs, widen the
/// shift search on demand. Deterministic for fixed options.
EngineResult maximize_potential(const Multigraph& g, int palette, const EngineOptions& options = {});

} // namespace ecsub
