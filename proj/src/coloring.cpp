#include "ecsub/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ecsub {

std::vector<int> ColorSet::to_vector() const {
    std::vector<int> out;
    std::uint64_t b = bits;
    while (b) {
        int c = __builtin_ctzll(b);
        out.push_back(c);
        b &= b - 1;
    }
    return out;
}

PartialColoring::PartialColoring(int edge_count, int palette)
    : palette_(palette), color_(static_cast<size_t>(edge_count), uncolored) {
    if (palette < 1 || palette > 63) throw std::invalid_argument("palette must be in [1,63]");
}

void PartialColoring::set(int e, int c) {
    if (c < 1 || c > palette_) throw std::invalid_argument("color out of palette");
    int& slot = color_[static_cast<size_t>(e)];
    if (slot == uncolored) ++colored_;
    slot = c;
}

void PartialColoring::clear(int e) {
    int& slot = color_[static_cast<size_t>(e)];
    if (slot != uncolored) --colored_;
    slot = uncolored;
}

ColorSet free_colors(const Multigraph& g, const PartialColoring& col, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    ColorSet free = ColorSet::full(col.palette());
    for (const Multigraph::Incidence& inc : g.incident(v)) {
        int c = col.color(inc.edge);
        if (c != PartialColoring::uncolored) free.remove(c);
    }
    return free;
}

std::vector<FreeComponent> free_components(const Multigraph& g, const PartialColoring& col) {
    const int n = g.vertex_count();
    std::vector<ColorSet> free(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) free[static_cast<size_t>(v)] = free_colors(g, col, v);

    // Union-find over vertices joined by uncolored edges.
    std::vector<int> parent(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    std::vector<char> has_uncolored(static_cast<size_t>(n), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (col.is_colored(e)) continue;
        const Multigraph::Edge& ed = g.edge(e);
        has_uncolored[static_cast<size_t>(ed.u)] = 1;
        has_uncolored[static_cast<size_t>(ed.v)] = 1;
        int a = find(ed.u), b = find(ed.v);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }

    std::vector<int> root_to_idx(static_cast<size_t>(n), -1);
    std::vector<FreeComponent> comps;
    for (int v = 0; v < n; ++v) {
        bool member = has_uncolored[static_cast<size_t>(v)] || !free[static_cast<size_t>(v)].empty();
        if (!member) continue;
        int r = find(v);
        int idx = root_to_idx[static_cast<size_t>(r)];
        if (idx < 0) {
            idx = static_cast<int>(comps.size());
            root_to_idx[static_cast<size_t>(r)] = idx;
            comps.push_back({});
        }
        comps[static_cast<size_t>(idx)].vertices.push_back(v);
        comps[static_cast<size_t>(idx)].free_colors =
            comps[static_cast<size_t>(idx)].free_colors.unite(free[static_cast<size_t>(v)]);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (col.is_colored(e)) continue;
        int r = find(g.edge(e).u);
        comps[static_cast<size_t>(root_to_idx[static_cast<size_t>(r)])].edges.push_back(e);
    }
    // Vertex scan order already yields vertices sorted and components ordered
    // by smallest vertex; edge lists come out sorted by the id scan.
    return comps;
}

std::string Potential::to_string() const {
    std::ostringstream out;
    out << "(" << colored;
    if (oversized) out << "!";
    for (int i = static_cast<int>(counts.size()) - 1; i >= 0; --i) out << "," << counts[static_cast<size_t>(i)];
    out << ")";
    return out.str();
}

std::strong_ordering operator<=>(const Potential& a, const Potential& b) {
    // A coloring with an oversized component ranks below any without one.
    if (a.oversized != b.oversized) return a.oversized ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.colored != b.colored) return a.colored <=> b.colored;
    size_t len = std::max(a.counts.size(), b.counts.size());
    for (size_t i = len; i-- > 0;) {
        int ca = i < a.counts.size() ? a.counts[i] : 0;
        int cb = i < b.counts.size() ? b.counts[i] : 0;
        if (ca != cb) return ca <=> cb;
    }
    return std::strong_ordering::equal;
}

Potential potential(const Multigraph& g, const PartialColoring& col) {
    Potential psi;
    psi.colored = col.colored_count();
    psi.cap = col.palette() / 2;
    psi.counts.assign(static_cast<size_t>(psi.cap), 0);
    for (const FreeComponent& q : free_components(g, col)) {
        int sz = q.edge_size();
        if (sz == 0) continue;
        if (sz > psi.cap) {
            psi.oversized = true;
        } else {
            ++psi.counts[static_cast<size_t>(sz - 1)];
        }
    }
    return psi;
}

std::vector<ColoringViolation> validate(const Multigraph& g, const PartialColoring& col) {
    std::vector<ColoringViolation> out;
    if (col.edge_count() != g.edge_count()) {
        out.push_back({ColoringViolation::Kind::size_mismatch, -1, -1,
                       "coloring covers " + std::to_string(col.edge_count()) + " edges, graph has " +
                           std::to_string(g.edge_count())});
        return out;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int c = col.color(e);
        if (c < 0 || c > col.palette()) {
            out.push_back({ColoringViolation::Kind::bad_color, e, -1,
                           "edge " + std::to_string(e) + " has color " + std::to_string(c) +
                               " outside palette 1.." + std::to_string(col.palette())});
        }
    }
    if (!out.empty()) return out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i) {
            int ci = col.color(inc[i].edge);
            if (ci == PartialColoring::uncolored) continue;
            for (size_t j = i + 1; j < inc.size(); ++j) {
                int cj = col.color(inc[j].edge);
                if (cj == ci) {
                    out.push_back({ColoringViolation::Kind::improper, inc[i].edge, inc[j].edge,
                                   "edges " + std::to_string(inc[i].edge) + " and " + std::to_string(inc[j].edge) +
                                       " share vertex " + std::to_string(v) + " and color " + std::to_string(ci)});
                }
            }
        }
    }
    return out;
}

} // namespace ecsub
