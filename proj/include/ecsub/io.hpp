#pragma once

#include "ecsub/coloring.hpp"
#include "ecsub/multigraph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ecsub {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge-list format: '#' comment lines, a "p multigraph <n> <m>" header, then
/// m lines "e <u> <v>" with 1-based vertices, one line per parallel edge.
Multigraph read_multigraph(std::istream& in);
Multigraph read_multigraph_file(const std::string& path);
void write_multigraph(std::ostream& out, const Multigraph& g);

/// Coloring format: one "c <edge_id> <color>" line per edge in id order
/// (color 0 = uncolored), then "s colored <c> total <m> k <k>".
PartialColoring read_coloring(std::istream& in);
PartialColoring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const PartialColoring& col);

} // namespace ecsub
