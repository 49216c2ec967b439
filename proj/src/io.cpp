#include "ecsub/io.hpp"

#include <fstream>
#include <sstream>

namespace ecsub {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

} // namespace

Multigraph read_multigraph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) throw ParseError("empty graph file");
    std::istringstream header(line);
    std::string p, kind;
    long long n = 0, m = 0;
    if (!(header >> p >> kind >> n >> m) || p != "p" || kind != "multigraph")
        fail(lineno, "expected header 'p multigraph <n> <m>'");
    if (n < 0 || m < 0) fail(lineno, "negative counts in header");
    std::vector<Multigraph::Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, lineno)) fail(lineno, "expected " + std::to_string(m) + " edge lines");
        std::istringstream row(line);
        std::string tag;
        long long u = 0, v = 0;
        if (!(row >> tag >> u >> v) || tag != "e") fail(lineno, "expected 'e <u> <v>'");
        if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "vertex out of range 1.." + std::to_string(n));
        if (u == v) fail(lineno, "self-loop");
        edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    }
    return Multigraph(static_cast<int>(n), std::move(edges));
}

Multigraph read_multigraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_multigraph(in);
}

void write_multigraph(std::ostream& out, const Multigraph& g) {
    out << "p multigraph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Multigraph::Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
}

PartialColoring read_coloring(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, int>> entries;
    while (next_content_line(in, line, lineno)) {
        std::istringstream row(line);
        std::string tag;
        row >> tag;
        if (tag == "c") {
            long long e = 0, c = 0;
            if (!(row >> e >> c)) fail(lineno, "expected 'c <edge_id> <color>'");
            entries.push_back({static_cast<int>(e), static_cast<int>(c)});
        } else if (tag == "s") {
            std::string w_colored, w_total, w_k;
            long long colored = 0, total = 0, k = 0;
            if (!(row >> w_colored >> colored >> w_total >> total >> w_k >> k) || w_colored != "colored" ||
                w_total != "total" || w_k != "k")
                fail(lineno, "expected 's colored <c> total <m> k <k>'");
            if (k < 1 || k > 63) fail(lineno, "palette out of range");
            if (total != static_cast<long long>(entries.size()))
                fail(lineno, "footer total does not match number of 'c' lines");
            PartialColoring col(static_cast<int>(total), static_cast<int>(k));
            for (auto [e, c] : entries) {
                if (e < 0 || e >= col.edge_count()) fail(lineno, "edge id out of range");
                if (c < 0 || c > col.palette()) fail(lineno, "color out of range");
                if (c != 0) col.set(e, c);
            }
            if (col.colored_count() != static_cast<int>(colored))
                fail(lineno, "footer colored count does not match 'c' lines");
            return col;
        } else {
            fail(lineno, "unknown record '" + tag + "'");
        }
    }
    throw ParseError("coloring file has no 's' footer");
}

PartialColoring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const PartialColoring& col) {
    for (int e = 0; e < col.edge_count(); ++e) out << "c " << e << " " << col.color(e) << "\n";
    out << "s colored " << col.colored_count() << " total " << col.edge_count() << " k " << col.palette() << "\n";
}

} // namespace ecsub
