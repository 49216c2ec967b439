#include "ecsub/matching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ecsub {

namespace {

struct Blossom {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit Blossom(int vertex_count) : n(vertex_count), adj(static_cast<size_t>(vertex_count)) {}

    void add_edge(int u, int v) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        while (true) {
            a = base[static_cast<size_t>(a)];
            seen[static_cast<size_t>(a)] = 1;
            if (match[static_cast<size_t>(a)] == -1) break;
            a = parent[static_cast<size_t>(match[static_cast<size_t>(a)])];
        }
        while (true) {
            b = base[static_cast<size_t>(b)];
            if (seen[static_cast<size_t>(b)]) return b;
            b = parent[static_cast<size_t>(match[static_cast<size_t>(b)])];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base[static_cast<size_t>(v)] != stem) {
            in_blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = 1;
            in_blossom[static_cast<size_t>(base[static_cast<size_t>(match[static_cast<size_t>(v)])])] = 1;
            parent[static_cast<size_t>(v)] = child;
            child = match[static_cast<size_t>(v)];
            v = parent[static_cast<size_t>(match[static_cast<size_t>(v)])];
        }
    }

    int find_augmenting_path(int root) {
        used.assign(static_cast<size_t>(n), 0);
        parent.assign(static_cast<size_t>(n), -1);
        for (int i = 0; i < n; ++i) base[static_cast<size_t>(i)] = i;
        used[static_cast<size_t>(root)] = 1;
        std::deque<int> queue = {root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int to : adj[static_cast<size_t>(v)]) {
                if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
                    match[static_cast<size_t>(v)] == to)
                    continue;
                int mate_of_to = match[static_cast<size_t>(to)];
                if (to == root || (mate_of_to != -1 && parent[static_cast<size_t>(mate_of_to)] != -1)) {
                    int stem = lowest_common_base(v, to);
                    in_blossom.assign(static_cast<size_t>(n), 0);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in_blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) continue;
                        base[static_cast<size_t>(i)] = stem;
                        if (!used[static_cast<size_t>(i)]) {
                            used[static_cast<size_t>(i)] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent[static_cast<size_t>(to)] == -1) {
                    parent[static_cast<size_t>(to)] = v;
                    if (match[static_cast<size_t>(to)] == -1) return to;
                    used[static_cast<size_t>(match[static_cast<size_t>(to)])] = 1;
                    queue.push_back(match[static_cast<size_t>(to)]);
                }
            }
        }
        return -1;
    }

    std::vector<int> solve() {
        match.assign(static_cast<size_t>(n), -1);
        base.assign(static_cast<size_t>(n), 0);
        // Cheap greedy start; the search below only fills in the rest.
        for (int v = 0; v < n; ++v) {
            if (match[static_cast<size_t>(v)] != -1) continue;
            for (int to : adj[static_cast<size_t>(v)]) {
                if (match[static_cast<size_t>(to)] == -1) {
                    match[static_cast<size_t>(v)] = to;
                    match[static_cast<size_t>(to)] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (match[static_cast<size_t>(v)] != -1) continue;
            int leaf = find_augmenting_path(v);
            while (leaf != -1) {
                int pv = parent[static_cast<size_t>(leaf)];
                int next = match[static_cast<size_t>(pv)];
                match[static_cast<size_t>(leaf)] = pv;
                match[static_cast<size_t>(pv)] = leaf;
                leaf = next;
            }
        }
        return match;
    }
};

} // namespace

std::vector<int> maximum_matching_mates(int n, const std::vector<std::pair<int, int>>& edges) {
    Blossom b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.solve();
}

std::vector<int> max_k_matching(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("max_k_matching: k must be >= 1");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    std::vector<int> port_start(static_cast<size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        port_start[static_cast<size_t>(v) + 1] = port_start[static_cast<size_t>(v)] + std::min(k, g.degree(v));
    const int ports = port_start[static_cast<size_t>(n)];
    const int total = ports + 2 * m;
    auto link_a = [&](int e) { return ports + 2 * e; };
    auto link_b = [&](int e) { return ports + 2 * e + 1; };

    Blossom b(total);
    // Link edge first so the greedy seed starts from the empty selection;
    // edge nodes then reach their endpoint's ports in port order.
    for (int e = 0; e < m; ++e) {
        b.add_edge(link_a(e), link_b(e));
        const Multigraph::Edge& ed = g.edge(e);
        for (int p = port_start[static_cast<size_t>(ed.u)]; p < port_start[static_cast<size_t>(ed.u) + 1]; ++p)
            b.add_edge(link_a(e), p);
        for (int p = port_start[static_cast<size_t>(ed.v)]; p < port_start[static_cast<size_t>(ed.v) + 1]; ++p)
            b.add_edge(link_b(e), p);
    }
    std::vector<int> mate = b.solve();

    std::vector<int> selected;
    for (int e = 0; e < m; ++e) {
        int a = link_a(e), bb = link_b(e);
        int ma = mate[static_cast<size_t>(a)];
        int mb = mate[static_cast<size_t>(bb)];
        if (ma == bb) continue; // link matched internally: not selected
        if (ma != -1 && mb != -1) {
            selected.push_back(e);
            continue;
        }
        // Half-attached link: swing it onto its internal edge. Keeps the
        // matching maximum and the selection well defined.
        if (ma != -1) mate[static_cast<size_t>(ma)] = -1;
        if (mb != -1) mate[static_cast<size_t>(mb)] = -1;
        mate[static_cast<size_t>(a)] = bb;
        mate[static_cast<size_t>(bb)] = a;
    }
    return selected;
}

} // namespace ecsub
