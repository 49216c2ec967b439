#include "ecsub/engine.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace ecsub {

namespace {

int other_endpoint(const Multigraph& g, int e, int v) {
    const Multigraph::Edge& ed = g.edge(e);
    return ed.u == v ? ed.v : ed.u;
}

int edge_colored_at(const Multigraph& g, const PartialColoring& col, int v, int c) {
    for (const Multigraph::Incidence& inc : g.incident(v))
        if (col.color(inc.edge) == c) return inc.edge;
    return -1;
}

/// Maximal path from u whose edges alternate `first`, `second`, `first`, ...
/// Returns the traversed edges and the far endpoint (u itself if no edge of
/// color `first` leaves u).
std::pair<std::vector<int>, int> alternating_path(const Multigraph& g, const PartialColoring& col, int u, int first,
                                                  int second) {
    std::vector<int> edges;
    int cur = u;
    int want = first;
    while (true) {
        int e = edge_colored_at(g, col, cur, want);
        if (e < 0) break;
        edges.push_back(e);
        cur = other_endpoint(g, e, cur);
        want = want == first ? second : first;
        if (cur == u) break; // closed a cycle
    }
    return {std::move(edges), cur};
}

std::string coloring_key(const PartialColoring& col) {
    std::string key(static_cast<size_t>(col.edge_count()), '\0');
    for (int e = 0; e < col.edge_count(); ++e) key[static_cast<size_t>(e)] = static_cast<char>(col.color(e) + 1);
    return key;
}

bool edge_set_connected(const Multigraph& g, const std::vector<int>& edges) {
    if (edges.size() <= 1) return true;
    std::vector<int> verts;
    for (int e : edges) {
        verts.push_back(g.edge(e).u);
        verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<int> parent(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    int pieces = static_cast<int>(verts.size());
    for (int e : edges) {
        int a = find(index_of(g.edge(e).u));
        int b = find(index_of(g.edge(e).v));
        if (a != b) {
            parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
            --pieces;
        }
    }
    return pieces == 1;
}

/// Component of the free-edge graph containing edge `seed_edge` (which must
/// be uncolored): edges and their endpoints, plus the union of free colors.
FreeComponent component_of_edge(const Multigraph& g, const PartialColoring& col, int seed_edge) {
    FreeComponent comp;
    std::vector<int> stack = {g.edge(seed_edge).u, g.edge(seed_edge).v};
    std::unordered_set<int> vseen(stack.begin(), stack.end());
    std::unordered_set<int> eseen;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Multigraph::Incidence& inc : g.incident(v)) {
            if (col.is_colored(inc.edge) || eseen.count(inc.edge)) continue;
            eseen.insert(inc.edge);
            if (!vseen.count(inc.neighbor)) {
                vseen.insert(inc.neighbor);
                stack.push_back(inc.neighbor);
            }
        }
    }
    comp.vertices.assign(vseen.begin(), vseen.end());
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.edges.assign(eseen.begin(), eseen.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    for (int v : comp.vertices) comp.free_colors = comp.free_colors.unite(free_colors(g, col, v));
    return comp;
}

/// All valid single shifts of the component whose uncolored edges are
/// `comp_edges`: color one of them with a color freed by uncoloring an
/// incident edge, keeping the restriction to the component in one piece.
std::vector<Shift> enumerate_shifts(const Multigraph& g, const PartialColoring& col,
                                    const std::vector<int>& comp_edges) {
    std::vector<Shift> out;
    for (int f : comp_edges) {
        const Multigraph::Edge& fe = g.edge(f);
        for (auto [x, y] : {std::pair{fe.u, fe.v}, std::pair{fe.v, fe.u}}) {
            for (int a : free_colors(g, col, y).to_vector()) {
                int e2 = edge_colored_at(g, col, x, a);
                if (e2 < 0) continue;
                std::vector<int> moved = comp_edges;
                moved.erase(std::find(moved.begin(), moved.end(), f));
                moved.insert(std::lower_bound(moved.begin(), moved.end(), e2), e2);
                if (!edge_set_connected(g, moved)) continue;
                out.push_back({e2, f, a});
            }
        }
    }
    return out;
}

void apply_shift(PartialColoring& col, const Shift& s) {
    col.clear(s.uncolor_edge);
    col.set(s.color_edge, s.color);
}

struct SearchOutcome {
    std::optional<PartialColoring> improvement;
    std::string rule;
    bool exhausted = false;
};

/// Breadth-first walk over shift sequences of one component, looking for any
/// state with a strictly larger potential or an augmenting swap.
SearchOutcome search_component(const Multigraph& g, const PartialColoring& col, const FreeComponent& comp, int budget,
                               long long state_cap) {
    SearchOutcome out;
    const Potential psi0 = potential(g, col);
    std::unordered_set<std::string> visited;
    visited.insert(coloring_key(col));
    struct Node {
        PartialColoring col;
        std::vector<int> comp_edges;
        int depth;
    };
    std::deque<Node> queue;
    queue.push_back({col, comp.edges, 0});
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (node.depth >= budget) continue;
        for (const Shift& s : enumerate_shifts(g, node.col, node.comp_edges)) {
            PartialColoring next = node.col;
            apply_shift(next, s);
            std::string key = coloring_key(next);
            if (visited.count(key)) continue;
            if (static_cast<long long>(visited.size()) >= state_cap) {
                out.exhausted = true;
                return out;
            }
            visited.insert(std::move(key));
            FreeComponent moved = component_of_edge(g, next, s.uncolor_edge);
            if (potential(g, next) > psi0) {
                out.improvement = std::move(next);
                out.rule = "merge-move";
                return out;
            }
            bool augmented = false;
            for (int f : moved.edges) {
                if (auto aug = try_augment(g, next, f)) {
                    out.improvement = std::move(*aug);
                    out.rule = "move-augment";
                    augmented = true;
                    break;
                }
            }
            if (augmented) return out;
            queue.push_back({std::move(next), std::move(moved.edges), node.depth + 1});
        }
    }
    return out;
}

} // namespace

PartialColoring greedy_color(const Multigraph& g, int palette) {
    if (palette < 1) throw std::invalid_argument("greedy_color: palette must be >= 1");
    PartialColoring col(g.edge_count(), palette);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Multigraph::Edge& ed = g.edge(e);
        ColorSet common = free_colors(g, col, ed.u).intersect(free_colors(g, col, ed.v));
        if (!common.empty()) col.set(e, common.lowest());
    }
    return col;
}

PartialColoring kempe_swap(const Multigraph& g, const PartialColoring& col, int start, int a, int b) {
    if (a == b) throw std::invalid_argument("kempe_swap: colors must differ");
    if (a < 1 || a > col.palette() || b < 1 || b > col.palette())
        throw std::invalid_argument("kempe_swap: color out of palette");
    if (start < 0 || start >= g.vertex_count()) throw std::invalid_argument("kempe_swap: vertex out of range");

    std::vector<int> chain;
    std::unordered_set<int> vseen = {start};
    std::unordered_set<int> eseen;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Multigraph::Incidence& inc : g.incident(v)) {
            int c = col.color(inc.edge);
            if ((c != a && c != b) || eseen.count(inc.edge)) continue;
            eseen.insert(inc.edge);
            chain.push_back(inc.edge);
            if (!vseen.count(inc.neighbor)) {
                vseen.insert(inc.neighbor);
                stack.push_back(inc.neighbor);
            }
        }
    }
    PartialColoring out = col;
    for (int e : chain) out.set(e, col.color(e) == a ? b : a);
    return out;
}

std::optional<PartialColoring> try_augment(const Multigraph& g, const PartialColoring& col, int e) {
    if (col.is_colored(e)) throw std::invalid_argument("try_augment: edge already colored");
    const Multigraph::Edge& ed = g.edge(e);
    ColorSet fu = free_colors(g, col, ed.u);
    ColorSet fv = free_colors(g, col, ed.v);
    ColorSet common = fu.intersect(fv);
    if (!common.empty()) {
        PartialColoring out = col;
        out.set(e, common.lowest());
        return out;
    }
    for (int a : fu.to_vector()) {
        for (int b : fv.to_vector()) {
            // u misses a but carries b; walk the b,a,b,... path from u. If it
            // stops anywhere but v, swapping frees b at u while v keeps it.
            auto [path, terminal] = alternating_path(g, col, ed.u, b, a);
            if (terminal == ed.v) continue;
            PartialColoring out = col;
            for (int pe : path) out.set(pe, col.color(pe) == a ? b : a);
            out.set(e, b);
            return out;
        }
    }
    return std::nullopt;
}

std::vector<ElementaryMove> enumerate_elementary_moves(const Multigraph& g, const PartialColoring& col,
                                                       const FreeComponent& comp, int budget, long long state_cap) {
    std::vector<ElementaryMove> moves;
    auto record = [&](const PartialColoring& result) {
        ElementaryMove mv;
        mv.before = comp;
        for (int e = 0; e < g.edge_count(); ++e) {
            int before = col.color(e);
            int after = result.color(e);
            if (before == after) continue;
            if (before != PartialColoring::uncolored && after == PartialColoring::uncolored)
                mv.uncolored.push_back(e);
            else if (before == PartialColoring::uncolored)
                mv.colored.push_back({e, after});
            else
                mv.recolored.push_back({e, after});
        }
        mv.result = result;
        moves.push_back(std::move(mv));
    };
    record(col); // the trivial move

    std::unordered_set<std::string> visited;
    visited.insert(coloring_key(col));
    struct Node {
        PartialColoring col;
        std::vector<int> comp_edges;
        int depth;
    };
    std::deque<Node> queue;
    queue.push_back({col, comp.edges, 0});
    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (node.depth >= budget) continue;
        for (const Shift& s : enumerate_shifts(g, node.col, node.comp_edges)) {
            PartialColoring next = node.col;
            apply_shift(next, s);
            std::string key = coloring_key(next);
            if (visited.count(key) || static_cast<long long>(visited.size()) >= state_cap) continue;
            visited.insert(std::move(key));
            record(next);
            FreeComponent moved = component_of_edge(g, next, s.uncolor_edge);
            queue.push_back({std::move(next), std::move(moved.edges), node.depth + 1});
        }
    }
    return moves;
}

std::string check_name(Check c) {
    switch (c) {
        case Check::c1_shared_free_color: return "C1";
        case Check::c2_component_size: return "C2";
        case Check::c3_seeing_pair: return "C3";
        case Check::c4_reach_free_color: return "C4";
        case Check::c5_improving_move: return "C5";
    }
    return "?";
}

namespace {

void check_static(const Multigraph& g, const PartialColoring& col, Certification& cert) {
    const std::vector<FreeComponent> comps = free_components(g, col);
    std::vector<ColorSet> free(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) free[static_cast<size_t>(v)] = free_colors(g, col, v);

    // c1: disjoint free colors inside each component.
    for (const FreeComponent& q : comps) {
        for (size_t i = 0; i < q.vertices.size(); ++i) {
            for (size_t j = i + 1; j < q.vertices.size(); ++j) {
                ColorSet shared = free[static_cast<size_t>(q.vertices[i])].intersect(
                    free[static_cast<size_t>(q.vertices[j])]);
                if (!shared.empty()) {
                    CertViolation v;
                    v.check = Check::c1_shared_free_color;
                    v.component_vertices = q.vertices;
                    v.component_edges = q.edges;
                    v.vertex_a = q.vertices[i];
                    v.vertex_b = q.vertices[j];
                    v.color = shared.lowest();
                    v.detail = "vertices " + std::to_string(v.vertex_a) + "," + std::to_string(v.vertex_b) +
                               " share free color " + std::to_string(v.color);
                    cert.violations.push_back(std::move(v));
                }
            }
        }
    }

    // c2: component size and free-color supply.
    const int size_cap = col.palette() / 2;
    for (const FreeComponent& q : comps) {
        if (q.trivial()) continue;
        if (q.edge_size() > size_cap || q.free_colors.count() < 2 * q.edge_size()) {
            CertViolation v;
            v.check = Check::c2_component_size;
            v.component_vertices = q.vertices;
            v.component_edges = q.edges;
            v.detail = "component with " + std::to_string(q.edge_size()) + " edges has " +
                       std::to_string(q.free_colors.count()) + " free colors (cap " + std::to_string(size_cap) + ")";
            cert.violations.push_back(std::move(v));
        }
    }

    // c3: a component seeing another must have disjoint free colors from it.
    std::vector<int> comp_of(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t qi = 0; qi < comps.size(); ++qi)
        for (int v : comps[qi].vertices) comp_of[static_cast<size_t>(v)] = static_cast<int>(qi);
    for (int e = 0; e < g.edge_count(); ++e) {
        int c = col.color(e);
        if (c == PartialColoring::uncolored) continue;
        const Multigraph::Edge& ed = g.edge(e);
        for (auto [x, y] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
            int q1 = comp_of[static_cast<size_t>(x)];
            int q2 = comp_of[static_cast<size_t>(y)];
            if (q1 < 0 || q2 < 0 || q1 == q2) continue;
            if (!comps[static_cast<size_t>(q1)].free_colors.contains(c)) continue;
            ColorSet shared =
                comps[static_cast<size_t>(q1)].free_colors.intersect(comps[static_cast<size_t>(q2)].free_colors);
            if (shared.empty()) continue;
            CertViolation v;
            v.check = Check::c3_seeing_pair;
            v.component_vertices = comps[static_cast<size_t>(q1)].vertices;
            v.component_edges = comps[static_cast<size_t>(q1)].edges;
            v.other_component_edges = comps[static_cast<size_t>(q2)].edges;
            v.edge = e;
            v.color = shared.lowest();
            v.detail = "component at vertex " + std::to_string(x) + " sees component at vertex " + std::to_string(y) +
                       " with edge " + std::to_string(e) + " yet both miss color " + std::to_string(shared.lowest());
            cert.violations.push_back(std::move(v));
        }
    }

    // c4: free colors must stay pairwise disjoint across everything one
    // shift can pull into a component of two or more edges.
    for (const FreeComponent& q : comps) {
        if (q.edge_size() < 2) continue;
        std::vector<std::pair<int, std::optional<Shift>>> reach;
        for (int v : q.vertices) reach.push_back({v, std::nullopt});
        for (const Shift& s : enumerate_shifts(g, col, q.edges)) {
            PartialColoring next = col;
            apply_shift(next, s);
            FreeComponent moved = component_of_edge(g, next, s.uncolor_edge);
            for (int v : moved.vertices) {
                bool known = false;
                for (const auto& [u, _] : reach)
                    if (u == v) known = true;
                if (!known) reach.push_back({v, s});
            }
        }
        for (size_t i = 0; i < reach.size(); ++i) {
            for (size_t j = i + 1; j < reach.size(); ++j) {
                ColorSet shared = free[static_cast<size_t>(reach[i].first)].intersect(
                    free[static_cast<size_t>(reach[j].first)]);
                if (shared.empty()) continue;
                if (!reach[i].second && !reach[j].second) continue; // both inside the component: already c1
                CertViolation v;
                v.check = Check::c4_reach_free_color;
                v.component_vertices = q.vertices;
                v.component_edges = q.edges;
                v.vertex_a = reach[i].first;
                v.vertex_b = reach[j].first;
                v.shift_a = reach[i].second;
                v.shift_b = reach[j].second;
                v.color = shared.lowest();
                v.detail = "one-shift reach of component at vertex " + std::to_string(q.smallest_vertex()) +
                           " has vertices " + std::to_string(v.vertex_a) + "," + std::to_string(v.vertex_b) +
                           " sharing free color " + std::to_string(v.color);
                cert.violations.push_back(std::move(v));
            }
        }
    }
}

void check_search(const Multigraph& g, const PartialColoring& col, int budget, long long state_cap,
                  Certification& cert) {
    for (const FreeComponent& q : free_components(g, col)) {
        if (q.trivial()) continue;
        SearchOutcome out = search_component(g, col, q, budget, state_cap);
        cert.search_exhausted = cert.search_exhausted || out.exhausted;
        if (out.improvement) {
            CertViolation v;
            v.check = Check::c5_improving_move;
            v.component_vertices = q.vertices;
            v.component_edges = q.edges;
            v.improvement = std::move(out.improvement);
            v.detail = "shift search from component at vertex " + std::to_string(q.smallest_vertex()) +
                       " found an improving state (" + out.rule + ")";
            cert.violations.push_back(std::move(v));
            return; // one improving state is enough; the caller adopts it
        }
    }
}

} // namespace

Certification certify(const Multigraph& g, const PartialColoring& col, int budget, long long state_cap) {
    Certification cert;
    check_static(g, col, cert);
    check_search(g, col, budget, state_cap, cert);
    cert.pass = cert.violations.empty();
    return cert;
}

std::optional<PartialColoring> repair(const Multigraph& g, const PartialColoring& col,
                                      const CertViolation& violation) {
    const Potential psi0 = potential(g, col);
    auto accept = [&](std::optional<PartialColoring> cand) -> std::optional<PartialColoring> {
        if (cand && potential(g, *cand) > psi0) return cand;
        return std::nullopt;
    };
    switch (violation.check) {
        case Check::c1_shared_free_color: {
            for (int f : violation.component_edges) {
                const Multigraph::Edge& ed = g.edge(f);
                bool joins = (ed.u == violation.vertex_a && ed.v == violation.vertex_b) ||
                             (ed.u == violation.vertex_b && ed.v == violation.vertex_a);
                if (joins) {
                    PartialColoring out = col;
                    out.set(f, violation.color);
                    return accept(out);
                }
            }
            [[fallthrough]];
        }
        case Check::c2_component_size: {
            for (int f : violation.component_edges)
                if (auto aug = accept(try_augment(g, col, f))) return aug;
            return std::nullopt;
        }
        case Check::c3_seeing_pair: {
            // Free the seeing edge; the components fall into one piece, and
            // re-coloring any of their edges keeps the count while leaving a
            // strictly larger component behind.
            PartialColoring base = col;
            base.clear(violation.edge);
            for (const std::vector<int>* edges : {&violation.component_edges, &violation.other_component_edges})
                for (int f : *edges)
                    if (auto aug = accept(try_augment(g, base, f))) return aug;
            return std::nullopt;
        }
        case Check::c4_reach_free_color: {
            for (const std::optional<Shift>& s : {violation.shift_a, violation.shift_b}) {
                PartialColoring base = col;
                std::vector<int> targets = violation.component_edges;
                if (s) {
                    apply_shift(base, *s);
                    targets = component_of_edge(g, base, s->uncolor_edge).edges;
                }
                for (int f : targets)
                    if (auto aug = accept(try_augment(g, base, f))) return aug;
            }
            return std::nullopt;
        }
        case Check::c5_improving_move:
            return accept(violation.improvement);
    }
    return std::nullopt;
}

namespace {

bool augment_all(const Multigraph& g, PartialColoring& col, std::ostream* diag) {
    bool any = false;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (col.is_colored(e)) continue;
            if (auto aug = try_augment(g, col, e)) {
                if (diag)
                    *diag << "psi " << potential(g, col).to_string() << " -> " << potential(g, *aug).to_string()
                          << " rule augment edge " << e << "\n";
                col = std::move(*aug);
                progress = true;
                any = true;
                break;
            }
        }
    }
    return any;
}

long long ceil_fraction_times(const Rational& frac, int count) {
    long long num = frac.numerator() * count;
    long long den = frac.denominator();
    return (num + den - 1) / den;
}

} // namespace

EngineResult maximize_potential(const Multigraph& g, int palette, const EngineOptions& options) {
    EngineResult result;
    result.report = plan_guarantee(g);
    Rational target = options.target_fraction ? *options.target_fraction : palette_guarantee(result.report, palette);
    result.required_colored = static_cast<int>(ceil_fraction_times(target, g.edge_count()));

    int budget = options.budget > 0 ? options.budget : std::max(2, 2 * (palette / 2));
    long long state_cap = options.state_cap;
    std::ostream* diag = options.diag;

    PartialColoring col = greedy_color(g, palette);
    augment_all(g, col, diag);

    int escalations = 0;
    Certification cert;
    while (true) {
        cert = Certification{};
        check_static(g, col, cert);
        std::optional<PartialColoring> fixed;
        std::string rule;
        for (const CertViolation& v : cert.violations) {
            if (auto r = repair(g, col, v)) {
                fixed = std::move(r);
                rule = "repair-" + check_name(v.check);
                break;
            }
        }
        if (!fixed) {
            check_search(g, col, budget, state_cap, cert);
            for (const CertViolation& v : cert.violations) {
                if (v.check != Check::c5_improving_move) continue;
                if (auto r = repair(g, col, v)) {
                    fixed = std::move(r);
                    rule = "repair-C5";
                    break;
                }
            }
        }
        if (fixed) {
            if (diag)
                *diag << "psi " << potential(g, col).to_string() << " -> " << potential(g, *fixed).to_string()
                      << " rule " << rule << "\n";
            col = std::move(*fixed);
            augment_all(g, col, diag);
            continue;
        }
        cert.pass = cert.violations.empty();
        bool bound_ok = col.colored_count() >= result.required_colored;
        if (cert.pass && bound_ok) break;
        if (escalations >= options.max_escalations) {
            result.uncertified = true;
            break;
        }
        ++escalations;
        budget *= 2;
        state_cap *= 2;
        if (diag) *diag << "escalate budget=" << budget << " cap=" << state_cap << "\n";
    }

    result.coloring = std::move(col);
    result.certification = std::move(cert);
    result.escalations = escalations;
    result.final_budget = budget;
    return result;
}

} // namespace ecsub
