#include "ecsub/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecsub {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<size_t>(n_), {});
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        const Edge& e = edges_[static_cast<size_t>(id)];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("self-loops are not allowed");
        adj_[static_cast<size_t>(e.u)].push_back({e.v, id});
        adj_[static_cast<size_t>(e.v)].push_back({e.u, id});
    }
}

int Multigraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Multigraph::multiplicity(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range");
    int count = 0;
    for (const Incidence& inc : adj_[static_cast<size_t>(u)])
        if (inc.neighbor == v) ++count;
    return count;
}

int Multigraph::max_multiplicity() const {
    int best = 0;
    for (const Edge& e : edges_) best = std::max(best, multiplicity(e.u, e.v));
    return best;
}

int Multigraph::max_triangle_density() const {
    if (n_ < 3) return 0;
    std::vector<std::vector<int>> mult(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_), 0));
    for (const Edge& e : edges_) {
        ++mult[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)];
        ++mult[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)];
    }
    int best = 0;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            for (int c = b + 1; c < n_; ++c) {
                int inside = mult[static_cast<size_t>(a)][static_cast<size_t>(b)] +
                             mult[static_cast<size_t>(a)][static_cast<size_t>(c)] +
                             mult[static_cast<size_t>(b)][static_cast<size_t>(c)];
                best = std::max(best, inside);
            }
    return best;
}

namespace {

template <typename Pred>
std::optional<std::array<int, 3>> find_triple(const Multigraph& g, Pred pred) {
    const int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    std::vector<std::vector<int>> mult(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const Multigraph::Edge& e : g.edges()) {
        ++mult[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)];
        ++mult[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)];
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int ab = mult[static_cast<size_t>(a)][static_cast<size_t>(b)];
                int ac = mult[static_cast<size_t>(a)][static_cast<size_t>(c)];
                int bc = mult[static_cast<size_t>(b)][static_cast<size_t>(c)];
                if (pred(ab, ac, bc)) return std::array<int, 3>{a, b, c};
            }
    return std::nullopt;
}

} // namespace

std::optional<std::array<int, 3>> Multigraph::contains_ck3(int c) const {
    if (c < 1) throw std::invalid_argument("contains_ck3: c must be >= 1");
    return find_triple(*this, [c](int ab, int ac, int bc) {
        return ab >= c && ac >= c && bc >= c;
    });
}

std::optional<std::array<int, 3>> Multigraph::contains_ck3_plus_e(int c) const {
    if (c < 1) throw std::invalid_argument("contains_ck3_plus_e: c must be >= 1");
    return find_triple(*this, [c](int ab, int ac, int bc) {
        return ab >= c && ac >= c && bc >= c && (ab > c || ac > c || bc > c);
    });
}

bool Multigraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Incidence& inc : adj_[static_cast<size_t>(v)]) {
            if (!seen[static_cast<size_t>(inc.neighbor)]) {
                seen[static_cast<size_t>(inc.neighbor)] = 1;
                ++reached;
                stack.push_back(inc.neighbor);
            }
        }
    }
    return reached == n_;
}

std::vector<std::vector<int>> Multigraph::components() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack = {s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const Incidence& inc : adj_[static_cast<size_t>(v)]) {
                if (!seen[static_cast<size_t>(inc.neighbor)]) {
                    seen[static_cast<size_t>(inc.neighbor)] = 1;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "cK3") return Family::c_k3;
    if (name == "cK3PlusE") return Family::c_k3_plus_e;
    if (name == "cK3MinusE") return Family::c_k3_minus_e;
    if (name == "joinedTwins") return Family::joined_twins;
    if (name == "petersen") return Family::petersen;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::c_k3: return "cK3";
        case Family::c_k3_plus_e: return "cK3PlusE";
        case Family::c_k3_minus_e: return "cK3MinusE";
        case Family::joined_twins: return "joinedTwins";
        case Family::petersen: return "petersen";
    }
    return "?";
}

namespace {

void add_parallel(std::vector<Multigraph::Edge>& edges, int u, int v, int count) {
    for (int i = 0; i < count; ++i) edges.push_back({u, v});
}

} // namespace

Multigraph generate(Family family, int c) {
    if (family != Family::petersen && c < 1)
        throw std::invalid_argument("generate: parameter must be >= 1");
    std::vector<Multigraph::Edge> edges;
    switch (family) {
        case Family::c_k3:
            add_parallel(edges, 0, 1, c);
            add_parallel(edges, 0, 2, c);
            add_parallel(edges, 1, 2, c);
            return Multigraph(3, std::move(edges));
        case Family::c_k3_plus_e:
            add_parallel(edges, 0, 1, c);
            add_parallel(edges, 0, 2, c);
            add_parallel(edges, 1, 2, c);
            edges.push_back({0, 1});
            return Multigraph(3, std::move(edges));
        case Family::c_k3_minus_e:
            add_parallel(edges, 0, 1, c);
            add_parallel(edges, 0, 2, c);
            add_parallel(edges, 1, 2, c - 1);
            return Multigraph(3, std::move(edges));
        case Family::joined_twins:
            // Two copies of c_k3_plus_e; vertex 2 and vertex 5 are the apexes
            // of degree 2c, joined by the final edge.
            add_parallel(edges, 0, 1, c + 1);
            add_parallel(edges, 0, 2, c);
            add_parallel(edges, 1, 2, c);
            add_parallel(edges, 3, 4, c + 1);
            add_parallel(edges, 3, 5, c);
            add_parallel(edges, 4, 5, c);
            edges.push_back({2, 5});
            return Multigraph(6, std::move(edges));
        case Family::petersen: {
            for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
            for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
            for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
            return Multigraph(10, std::move(edges));
        }
    }
    throw std::invalid_argument("generate: unknown family");
}

Subgraph make_subgraph(const Multigraph& g, const std::vector<int>& edge_ids) {
    Subgraph out;
    std::vector<int> host_to_sub(static_cast<size_t>(g.vertex_count()), -1);
    for (int id : edge_ids) {
        const Multigraph::Edge& e = g.edge(id);
        for (int v : {e.u, e.v}) {
            if (host_to_sub[static_cast<size_t>(v)] < 0) {
                host_to_sub[static_cast<size_t>(v)] = 0;
            }
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (host_to_sub[static_cast<size_t>(v)] == 0) {
            host_to_sub[static_cast<size_t>(v)] = static_cast<int>(out.vertex_to_host.size());
            out.vertex_to_host.push_back(v);
        }
    }
    std::vector<Multigraph::Edge> edges;
    for (int id : edge_ids) {
        const Multigraph::Edge& e = g.edge(id);
        edges.push_back({host_to_sub[static_cast<size_t>(e.u)], host_to_sub[static_cast<size_t>(e.v)]});
        out.edge_to_host.push_back(id);
    }
    out.graph = Multigraph(static_cast<int>(out.vertex_to_host.size()), std::move(edges));
    return out;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int SplitMix64::below(int bound) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
}

Multigraph random_multigraph(int vertex_count, int edge_target, int max_degree_cap, SplitMix64& rng) {
    std::vector<Multigraph::Edge> edges;
    std::vector<int> degree(static_cast<size_t>(vertex_count), 0);
    int attempts = 0;
    const int max_attempts = edge_target * 20 + 40;
    while (static_cast<int>(edges.size()) < edge_target && attempts < max_attempts) {
        ++attempts;
        int u = rng.below(vertex_count);
        int v = rng.below(vertex_count);
        if (u == v) continue;
        if (degree[static_cast<size_t>(u)] >= max_degree_cap) continue;
        if (degree[static_cast<size_t>(v)] >= max_degree_cap) continue;
        edges.push_back({std::min(u, v), std::max(u, v)});
        ++degree[static_cast<size_t>(u)];
        ++degree[static_cast<size_t>(v)];
    }
    return Multigraph(vertex_count, std::move(edges));
}

} // namespace ecsub
