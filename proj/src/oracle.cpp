#include "ecsub/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace ecsub {

namespace {

struct Searcher {
    const Multigraph& g;
    const int k;
    const long long node_cap;

    std::vector<int> order;          // edge ids in branch order
    std::vector<std::uint64_t> used; // per-vertex palette usage
    std::vector<int> rem_deg;        // endpoints not yet decided
    std::vector<int> triple_of;      // edge -> dense-triple index, -1 if none
    std::vector<int> rem_inside;     // undecided edges per dense triple
    std::vector<int> colored_inside; // colored edges per dense triple
    int rem_edges = 0;
    int colored = 0;

    std::vector<int> assign;
    std::vector<int> best_assign;
    int best = -1;
    long long nodes = 0;

    Searcher(const Multigraph& graph, int palette, long long cap) : g(graph), k(palette), node_cap(cap) {
        const int n = g.vertex_count();
        const int m = g.edge_count();
        used.assign(static_cast<size_t>(n), 0);
        rem_deg.assign(static_cast<size_t>(n), 0);
        for (const Multigraph::Edge& e : g.edges()) {
            ++rem_deg[static_cast<size_t>(e.u)];
            ++rem_deg[static_cast<size_t>(e.v)];
        }
        assign.assign(static_cast<size_t>(m), 0);
        best_assign = assign;
        rem_edges = m;

        // Fail-first order: heavy parallel bundles and busy endpoints first.
        // Same-pair edges end up contiguous, which the drop symmetry cut uses.
        order.resize(static_cast<size_t>(m));
        std::iota(order.begin(), order.end(), 0);
        auto key = [&](int id) {
            const Multigraph::Edge& e = g.edge(id);
            return std::tuple{-g.multiplicity(e.u, e.v), -(g.degree(e.u) + g.degree(e.v)),
                              std::min(e.u, e.v), std::max(e.u, e.v), id};
        };
        std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });

        pick_dense_triples();
    }

    // Vertex-disjoint triples holding more than k edges; inside them at most
    // k edges can ever be colored, which caps the bound tightly on graphs
    // built from fat triangles.
    void pick_dense_triples() {
        const int n = g.vertex_count();
        triple_of.assign(static_cast<size_t>(g.edge_count()), -1);
        if (n < 3) return;
        std::vector<std::vector<int>> mult(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        for (const Multigraph::Edge& e : g.edges()) {
            ++mult[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)];
            ++mult[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)];
        }
        struct Triple {
            int inside, a, b, c;
        };
        std::vector<Triple> cand;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    int inside = mult[static_cast<size_t>(a)][static_cast<size_t>(b)] +
                                 mult[static_cast<size_t>(a)][static_cast<size_t>(c)] +
                                 mult[static_cast<size_t>(b)][static_cast<size_t>(c)];
                    if (inside > k) cand.push_back({inside, a, b, c});
                }
        std::sort(cand.begin(), cand.end(), [](const Triple& x, const Triple& y) {
            return std::tuple{-x.inside, x.a, x.b, x.c} < std::tuple{-y.inside, y.a, y.b, y.c};
        });
        std::vector<char> taken(static_cast<size_t>(n), 0);
        int count = 0;
        for (const Triple& t : cand) {
            if (taken[static_cast<size_t>(t.a)] || taken[static_cast<size_t>(t.b)] || taken[static_cast<size_t>(t.c)])
                continue;
            taken[static_cast<size_t>(t.a)] = taken[static_cast<size_t>(t.b)] = taken[static_cast<size_t>(t.c)] = 1;
            for (int e = 0; e < g.edge_count(); ++e) {
                const Multigraph::Edge& ed = g.edge(e);
                bool ue = ed.u == t.a || ed.u == t.b || ed.u == t.c;
                bool ve = ed.v == t.a || ed.v == t.b || ed.v == t.c;
                if (ue && ve) triple_of[static_cast<size_t>(e)] = count;
            }
            ++count;
        }
        rem_inside.assign(static_cast<size_t>(count), 0);
        colored_inside.assign(static_cast<size_t>(count), 0);
        for (int e = 0; e < g.edge_count(); ++e)
            if (triple_of[static_cast<size_t>(e)] >= 0) ++rem_inside[static_cast<size_t>(triple_of[static_cast<size_t>(e)])];
    }

    int upper_bound() const {
        long long cap_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int room = k - __builtin_popcountll(used[static_cast<size_t>(v)]);
            cap_sum += std::min(room, rem_deg[static_cast<size_t>(v)]);
        }
        long long ub = colored + std::min<long long>(rem_edges, cap_sum / 2);
        long long outside = rem_edges;
        long long triple_part = 0;
        for (size_t t = 0; t < rem_inside.size(); ++t) {
            outside -= rem_inside[t];
            triple_part += std::min(rem_inside[t], k - colored_inside[t]);
        }
        return static_cast<int>(std::min(ub, colored + triple_part + outside));
    }

    bool same_pair(int e1, int e2) const {
        const Multigraph::Edge& a = g.edge(e1);
        const Multigraph::Edge& b = g.edge(e2);
        return std::minmax(a.u, a.v) == std::minmax(b.u, b.v);
    }

    void dfs(size_t pos, int max_used) {
        if (++nodes > node_cap) throw NodeCapExceeded("oracle node cap exceeded");
        if (pos == order.size()) {
            if (colored > best) {
                best = colored;
                best_assign = assign;
            }
            return;
        }
        if (upper_bound() <= best) return;
        const int e = order[static_cast<size_t>(pos)];
        const Multigraph::Edge& ed = g.edge(e);
        const int t = triple_of[static_cast<size_t>(e)];

        --rem_deg[static_cast<size_t>(ed.u)];
        --rem_deg[static_cast<size_t>(ed.v)];
        --rem_edges;
        if (t >= 0) --rem_inside[static_cast<size_t>(t)];

        // Dropped parallel copies go last in their bundle.
        bool may_color = !(pos > 0 && same_pair(order[pos - 1], e) && assign[static_cast<size_t>(order[pos - 1])] == 0);
        if (may_color) {
            std::uint64_t blocked = used[static_cast<size_t>(ed.u)] | used[static_cast<size_t>(ed.v)];
            int limit = std::min(k, max_used + 1); // at most one fresh color
            for (int c = 1; c <= limit; ++c) {
                if ((blocked >> c) & 1) continue;
                assign[static_cast<size_t>(e)] = c;
                used[static_cast<size_t>(ed.u)] |= std::uint64_t{1} << c;
                used[static_cast<size_t>(ed.v)] |= std::uint64_t{1} << c;
                ++colored;
                if (t >= 0) ++colored_inside[static_cast<size_t>(t)];
                dfs(pos + 1, std::max(max_used, c));
                if (t >= 0) --colored_inside[static_cast<size_t>(t)];
                --colored;
                used[static_cast<size_t>(ed.u)] &= ~(std::uint64_t{1} << c);
                used[static_cast<size_t>(ed.v)] &= ~(std::uint64_t{1} << c);
                assign[static_cast<size_t>(e)] = 0;
            }
        }
        dfs(pos + 1, max_used); // drop e

        if (t >= 0) ++rem_inside[static_cast<size_t>(t)];
        ++rem_edges;
        ++rem_deg[static_cast<size_t>(ed.u)];
        ++rem_deg[static_cast<size_t>(ed.v)];
    }
};

} // namespace

OracleResult exact_max_kecs(const Multigraph& g, int k, long long node_cap) {
    if (k < 1 || k > 63) throw std::invalid_argument("exact_max_kecs: k must be in [1,63]");
    Searcher s(g, k, node_cap);
    s.dfs(0, 0);
    OracleResult out;
    out.opt = s.best;
    out.nodes = s.nodes;
    out.witness = PartialColoring(g.edge_count(), k);
    for (int e = 0; e < g.edge_count(); ++e)
        if (s.best_assign[static_cast<size_t>(e)] != 0) out.witness.set(e, s.best_assign[static_cast<size_t>(e)]);
    return out;
}

} // namespace ecsub
