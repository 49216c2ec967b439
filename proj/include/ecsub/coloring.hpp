#pragma once

#include "ecsub/multigraph.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ecsub {

/// Set of colors out of {1..k}, k <= 63, as a bitmask (bit c = color c).
struct ColorSet {
    std::uint64_t bits = 0;

    static ColorSet full(int k) { return {((std::uint64_t{1} << k) - 1) << 1}; }

    bool contains(int c) const { return (bits >> c) & 1; }
    void add(int c) { bits |= std::uint64_t{1} << c; }
    void remove(int c) { bits &= ~(std::uint64_t{1} << c); }
    bool empty() const { return bits == 0; }
    int count() const { return __builtin_popcountll(bits); }
    int lowest() const { return bits ? __builtin_ctzll(bits) : 0; }
    bool intersects(ColorSet other) const { return (bits & other.bits) != 0; }
    ColorSet intersect(ColorSet other) const { return {bits & other.bits}; }
    ColorSet unite(ColorSet other) const { return {bits | other.bits}; }
    std::vector<int> to_vector() const;

    friend bool operator==(ColorSet a, ColorSet b) { return a.bits == b.bits; }
};

/// Partial proper edge coloring with palette {1..k}. Edges not yet assigned
/// carry the uncolored sentinel. Plain value type: copy it to branch.
class PartialColoring {
public:
    static constexpr int uncolored = 0;

    PartialColoring() = default;
    PartialColoring(int edge_count, int palette);

    int palette() const { return palette_; }
    int edge_count() const { return static_cast<int>(color_.size()); }
    int color(int e) const { return color_[static_cast<size_t>(e)]; }
    bool is_colored(int e) const { return color_[static_cast<size_t>(e)] != uncolored; }
    int colored_count() const { return colored_; }

    void set(int e, int c);
    void clear(int e);

    const std::vector<int>& raw() const { return color_; }

    friend bool operator==(const PartialColoring& a, const PartialColoring& b) {
        return a.palette_ == b.palette_ && a.color_ == b.color_;
    }

private:
    int palette_ = 0;
    int colored_ = 0;
    std::vector<int> color_;
};

/// Connected component of the free-edge graph: vertices that still have a
/// free color plus the uncolored edges joining them. Trivial components have
/// a single vertex and no edges.
struct FreeComponent {
    std::vector<int> vertices;   // sorted
    std::vector<int> edges;      // uncolored edge ids, sorted
    ColorSet free_colors;        // union of free colors over vertices

    bool trivial() const { return edges.empty(); }
    int edge_size() const { return static_cast<int>(edges.size()); }
    int smallest_vertex() const { return vertices.front(); }
};

/// Free colors at v: palette minus the colors on edges incident to v.
ColorSet free_colors(const Multigraph& g, const PartialColoring& col, int v);

/// All free components, ordered by smallest contained vertex. Includes a
/// trivial component for every vertex with a free color and no incident
/// uncolored edge.
std::vector<FreeComponent> free_components(const Multigraph& g, const PartialColoring& col);

/// Lexicographic termination measure: colored count first, then component
/// counts from large sizes down. Components bigger than floor(palette/2) are
/// folded into a flag that compares below everything without one.
struct Potential {
    int colored = 0;
    int cap = 0;                  // floor(palette/2)
    std::vector<int> counts;      // counts[i] = number of components with i+1 edges
    bool oversized = false;       // any component with more than cap edges

    std::string to_string() const;
    friend std::strong_ordering operator<=>(const Potential& a, const Potential& b);
    friend bool operator==(const Potential& a, const Potential& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }
};

Potential potential(const Multigraph& g, const PartialColoring& col);

struct ColoringViolation {
    enum class Kind { bad_color, improper, size_mismatch };
    Kind kind;
    int edge_a = -1;
    int edge_b = -1;
    std::string message;
};

/// Empty result iff col is a well-formed proper partial coloring of g.
std::vector<ColoringViolation> validate(const Multigraph& g, const PartialColoring& col);

} // namespace ecsub
