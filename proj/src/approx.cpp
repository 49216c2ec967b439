#include "ecsub/approx.hpp"

#include "ecsub/matching.hpp"
#include "ecsub/pipeline.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ecsub {

std::string class_name(ComponentClass c) {
    switch (c) {
        case ComponentClass::special_even: return "special-even";
        case ComponentClass::special_odd: return "special-odd";
        case ComponentClass::generic: return "generic";
    }
    return "?";
}

ComponentClass classify_component(const Multigraph& comp, int k) {
    if (comp.vertex_count() != 3) return ComponentClass::generic;
    std::array<int, 3> mult = {comp.multiplicity(0, 1), comp.multiplicity(0, 2), comp.multiplicity(1, 2)};
    std::sort(mult.begin(), mult.end());
    if (k % 2 == 0) {
        int c = k / 2;
        if (mult[0] == c && mult[1] == c && mult[2] == c) return ComponentClass::special_even;
    } else {
        int c = (k - 1) / 2;
        if (mult[0] == c && mult[1] == c && mult[2] == c + 1) return ComponentClass::special_odd;
    }
    return ComponentClass::generic;
}

namespace {

/// On three vertices every two edges meet, so handing k distinct colors to k
/// distinct edges is proper. Colors go round-robin over the vertex pairs.
PartialColoring color_special(const Multigraph& comp, int k) {
    std::array<std::vector<int>, 3> buckets; // edges per vertex pair (0,1),(0,2),(1,2)
    for (int e = 0; e < comp.edge_count(); ++e) {
        const Multigraph::Edge& ed = comp.edge(e);
        int lo = std::min(ed.u, ed.v), hi = std::max(ed.u, ed.v);
        int pair = (lo == 0) ? (hi == 1 ? 0 : 1) : 2;
        buckets[static_cast<size_t>(pair)].push_back(e);
    }
    std::array<size_t, 3> next{};
    PartialColoring col(comp.edge_count(), k);
    for (int c = 1; c <= k; ++c) {
        for (int probe = 0; probe < 3; ++probe) {
            size_t pair = static_cast<size_t>(((c - 1) + probe) % 3);
            if (next[pair] < buckets[pair].size()) {
                col.set(buckets[pair][next[pair]++], c);
                break;
            }
        }
    }
    return col;
}

} // namespace

ApproxResult approximate_kecs(const Multigraph& g, int k, const EngineOptions& options) {
    if (k < 1) throw std::invalid_argument("approximate_kecs: k must be >= 1");
    ApproxResult result;
    result.k_matching = max_k_matching(g, k);
    result.final_coloring = PartialColoring(g.edge_count(), k);

    // Group the matching edges into connected components.
    std::vector<int> parent(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) parent[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (int e : result.k_matching) {
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> root_to_comp(static_cast<size_t>(g.vertex_count()), -1);
    for (int e : result.k_matching) {
        int r = find(g.edge(e).u);
        if (root_to_comp[static_cast<size_t>(r)] < 0) {
            root_to_comp[static_cast<size_t>(r)] = static_cast<int>(result.components.size());
            result.components.push_back({});
        }
        result.components[static_cast<size_t>(root_to_comp[static_cast<size_t>(r)])].edges.push_back(e);
    }

    for (ApproxComponent& comp : result.components) {
        Subgraph sub = make_subgraph(g, comp.edges);
        comp.vertices = sub.vertex_to_host;
        comp.cls = classify_component(sub.graph, k);
        PartialColoring local;
        if (comp.cls == ComponentClass::generic) {
            ColorRun run = color_graph(sub.graph, k, options);
            comp.uncertified = run.engine.uncertified;
            local = std::move(run.coloring);
        } else {
            local = color_special(sub.graph, k);
        }
        for (int e = 0; e < sub.graph.edge_count(); ++e) {
            int c = local.color(e);
            if (c != PartialColoring::uncolored) result.final_coloring.set(sub.edge_to_host[static_cast<size_t>(e)], c);
            if (c != PartialColoring::uncolored) ++comp.colored;
        }
    }

    for (const ApproxComponent& comp : result.components) {
        if (comp.edges.empty()) continue;
        Rational frac{comp.colored, static_cast<long long>(comp.edges.size())};
        result.guaranteed_fraction = std::min(result.guaranteed_fraction, frac);
    }
    return result;
}

} // namespace ecsub
