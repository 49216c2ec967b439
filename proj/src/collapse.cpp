#include "ecsub/collapse.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecsub {

std::optional<std::array<int, 3>> find_k_collapsible(const Multigraph& g, int k) {
    if (k < 0) throw std::invalid_argument("find_k_collapsible: k must be >= 0");
    const int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                int boundary = 0;
                std::array<int, 3> leaving{};  // per triple vertex
                std::array<int, 3> opposite{}; // edges not touching that vertex
                auto slot = [&](int v) { return v == a ? 0 : v == b ? 1 : 2; };
                bool ok = true;
                for (const Multigraph::Edge& e : g.edges()) {
                    bool ue = e.u == a || e.u == b || e.u == c;
                    bool ve = e.v == a || e.v == b || e.v == c;
                    if (ue && ve) {
                        for (int x : {a, b, c})
                            if (e.u != x && e.v != x) ++opposite[static_cast<size_t>(slot(x))];
                    } else if (ue || ve) {
                        ++boundary;
                        ++leaving[static_cast<size_t>(slot(ue ? e.u : e.v))];
                    }
                }
                if (boundary > k) ok = false;
                for (int i = 0; ok && i < 3; ++i)
                    if (opposite[static_cast<size_t>(i)] < leaving[static_cast<size_t>(i)]) ok = false;
                if (ok) return std::array<int, 3>{a, b, c};
            }
        }
    }
    return std::nullopt;
}

namespace {

CollapseRecord collapse_once(const Multigraph& g, const std::array<int, 3>& triple, Multigraph& out_graph) {
    CollapseRecord rec;
    rec.triple = triple;
    rec.prev_vertex_count = g.vertex_count();
    rec.prev_edge_count = g.edge_count();

    auto in_triple = [&](int v) { return v == triple[0] || v == triple[1] || v == triple[2]; };

    // The merged vertex takes the smallest index of the triple; everything
    // after the two removed vertices shifts down.
    rec.vertex_map.assign(static_cast<size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == triple[1] || v == triple[2]) continue;
        rec.vertex_map[static_cast<size_t>(v)] = next++;
    }
    rec.vertex_map[static_cast<size_t>(triple[1])] = rec.vertex_map[static_cast<size_t>(triple[0])];
    rec.vertex_map[static_cast<size_t>(triple[2])] = rec.vertex_map[static_cast<size_t>(triple[0])];
    rec.new_vertex = rec.vertex_map[static_cast<size_t>(triple[0])];

    std::vector<Multigraph::Edge> edges;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Multigraph::Edge& e = g.edge(id);
        bool ue = in_triple(e.u), ve = in_triple(e.v);
        if (ue && ve) {
            rec.internal.push_back({id, e.u, e.v});
        } else if (ue || ve) {
            int inside = ue ? e.u : e.v;
            int outside = ue ? e.v : e.u;
            rec.boundary.push_back({id, static_cast<int>(edges.size()), inside, outside});
            rec.edge_map.push_back(id);
            edges.push_back({rec.vertex_map[static_cast<size_t>(e.u)], rec.vertex_map[static_cast<size_t>(e.v)]});
        } else {
            rec.edge_map.push_back(id);
            edges.push_back({rec.vertex_map[static_cast<size_t>(e.u)], rec.vertex_map[static_cast<size_t>(e.v)]});
        }
    }
    out_graph = Multigraph(next, std::move(edges));
    return rec;
}

} // namespace

CollapseResult collapse_all(const Multigraph& g, int k) {
    CollapseResult result;
    result.collapsed = g;
    while (auto triple = find_k_collapsible(result.collapsed, k)) {
        Multigraph next;
        result.records.push_back(collapse_once(result.collapsed, *triple, next));
        result.collapsed = std::move(next);
    }
    return result;
}

PartialColoring lift_coloring(const Multigraph& collapsed, const std::vector<CollapseRecord>& records,
                              const PartialColoring& col) {
    if (!validate(collapsed, col).empty())
        throw std::invalid_argument("lift_coloring: coloring is not proper on the collapsed graph");

    PartialColoring current = col;
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        const CollapseRecord& rec = *it;
        PartialColoring prev(rec.prev_edge_count, current.palette());
        for (int new_id = 0; new_id < static_cast<int>(rec.edge_map.size()); ++new_id) {
            int c = current.color(new_id);
            if (c != PartialColoring::uncolored) prev.set(rec.edge_map[static_cast<size_t>(new_id)], c);
        }

        // Colors leaving the triple through x go to edges opposite x. All of
        // them meet at the merged vertex in the collapsed graph, so they are
        // pairwise distinct and the assignment stays proper.
        ColorSet used_at_triple;
        for (const CollapseRecord::BoundaryEdge& b : rec.boundary) {
            int c = current.color(b.new_id);
            if (c != PartialColoring::uncolored) used_at_triple.add(c);
        }
        for (int x : rec.triple) {
            std::vector<int> opposite;
            for (const CollapseRecord::InternalEdge& e : rec.internal)
                if (e.u != x && e.v != x) opposite.push_back(e.id);
            size_t slot = 0;
            for (const CollapseRecord::BoundaryEdge& b : rec.boundary) {
                if (b.inside != x) continue;
                int c = current.color(b.new_id);
                if (c == PartialColoring::uncolored) continue;
                if (slot >= opposite.size())
                    throw std::logic_error("lift_coloring: record violates the collapsibility inequality");
                prev.set(opposite[slot++], c);
            }
        }

        // Remaining palette colors are unused anywhere at the triple; each
        // colors one more internal edge until edges or colors run out.
        std::vector<int> uncolored_internal;
        for (const CollapseRecord::InternalEdge& e : rec.internal)
            if (!prev.is_colored(e.id)) uncolored_internal.push_back(e.id);
        size_t fill = 0;
        for (int c = 1; c <= current.palette() && fill < uncolored_internal.size(); ++c) {
            if (used_at_triple.contains(c)) continue;
            prev.set(uncolored_internal[fill++], c);
        }

        current = std::move(prev);
    }
    return current;
}

} // namespace ecsub
