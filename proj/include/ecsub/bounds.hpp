#pragma once

#include "ecsub/multigraph.hpp"

#include <boost/rational.hpp>

#include <array>
#include <optional>
#include <string>

namespace ecsub {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

enum class Theorem {
    shannon,          // delta / floor(3*delta/2), always valid
    forbidden_free,   // delta / (floor(3*delta/2)-1), needs the bottleneck triple absent
    connected,        // parity-dependent bound for connected graphs != the bottleneck graph
    triangle_density, // delta / t for sparse-triple graphs with t above the sqrt(22) threshold
};

std::string theorem_name(Theorem t);

/// delta / floor(3*delta/2); delta >= 1.
Rational shannon_fraction(int delta);

/// delta / (floor(3*delta/2) - 1); delta >= 4.
Rational beyond_shannon_fraction(int delta);

/// 2*delta/(3*delta-2) for even delta, (2*delta+1)/(3*delta) for odd; delta >= 3.
Rational connected_fraction(int delta);

/// Exact minimum of {7/2} and (3*delta-alpha)/(2e) over integer triples
/// (e, alpha, beta) with e >= 2, alpha >= 2e, beta >= 0, alpha+beta <= delta,
/// e+delta-beta <= t, 2*beta+delta-alpha >= k+1. Full enumeration.
Rational rho(int delta, int k, int t);

/// delta/(3*mu), valid when (6*mu + 2*delta)^2 >= 22*delta^2 (the
/// multiplicity threshold, decided in integers). Throws otherwise.
Rational corollary_mu_fraction(int delta, int mu);

/// Smallest integer t with (2t + 2*delta)^2 >= 22*delta^2, i.e. the least
/// triple density the density theorem tolerates.
int density_threshold(int delta);

struct BoundReport {
    int delta = 0;
    int t_measured = 0; // max triple density found in the graph
    int t = 0;          // density parameter backing the selected bound
    int k = 0;          // collapse parameter min(delta, 2(t-delta)+1)
    Theorem theorem = Theorem::shannon;
    Rational guarantee{1, 1};
    bool forbidden_even = false;  // contains (delta/2)K3 (even delta)
    bool forbidden_odd = false;   // contains ((delta-1)/2)K3+e (odd delta)
    std::optional<std::array<int, 3>> forbidden_witness;
    std::string note;

    std::string forbidden_list() const;
    std::string render() const; // one-line "delta=.. t=.. k=.. theorem=.. guarantee=.. forbidden=.."
};

/// Strongest guarantee the theorems give for g, with the density/collapse
/// parameters that realize it.
BoundReport plan_guarantee(const Multigraph& g);

/// Fraction of edges a certified run with the given palette must color.
/// Combines the report's guarantee (valid whenever palette >= delta) with the
/// palette analogue of Shannon's bound, min(1, palette/floor(3*delta/2)).
Rational palette_guarantee(const BoundReport& report, int palette);

} // namespace ecsub
