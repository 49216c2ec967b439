#include "ecsub/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ecsub {

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r.numerator() << "/" << r.denominator();
    return out.str();
}

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::shannon: return "shannon";
        case Theorem::forbidden_free: return "forbidden-free";
        case Theorem::connected: return "connected";
        case Theorem::triangle_density: return "triangle-density";
    }
    return "?";
}

Rational shannon_fraction(int delta) {
    if (delta < 1) throw std::invalid_argument("shannon_fraction: delta must be >= 1");
    return {delta, 3 * delta / 2};
}

Rational beyond_shannon_fraction(int delta) {
    if (delta < 4) throw std::invalid_argument("beyond_shannon_fraction: delta must be >= 4");
    return {delta, 3 * delta / 2 - 1};
}

Rational connected_fraction(int delta) {
    if (delta < 3) throw std::invalid_argument("connected_fraction: delta must be >= 3");
    if (delta % 2 == 0) return {2 * delta, 3 * delta - 2};
    return {2 * delta + 1, 3 * delta};
}

Rational rho(int delta, int k, int t) {
    if (delta < 1 || k < 0 || k > delta || t < 0)
        throw std::invalid_argument("rho: need delta >= 1, 0 <= k <= delta, t >= 0");
    Rational best{7, 2};
    for (int e = 2; 2 * e <= delta; ++e) {
        for (int alpha = 2 * e; alpha <= delta; ++alpha) {
            for (int beta = 0; alpha + beta <= delta; ++beta) {
                if (e + delta - beta > t) continue;
                if (2 * beta + delta - alpha < k + 1) continue;
                best = std::min(best, Rational{3 * delta - alpha, 2 * e});
            }
        }
    }
    return best;
}

Rational corollary_mu_fraction(int delta, int mu) {
    if (delta < 1 || mu < 1) throw std::invalid_argument("corollary_mu_fraction: delta, mu must be >= 1");
    long long lhs = 6LL * mu + 2LL * delta;
    if (lhs * lhs < 22LL * delta * delta)
        throw std::domain_error("corollary_mu_fraction: multiplicity below threshold");
    return {delta, 3 * mu};
}

int density_threshold(int delta) {
    int t = 0;
    while ((2LL * t + 2LL * delta) * (2LL * t + 2LL * delta) < 22LL * delta * delta) ++t;
    return t;
}

std::string BoundReport::forbidden_list() const {
    if (forbidden_even) return "ck3";
    if (forbidden_odd) return "ck3+e";
    return "none";
}

std::string BoundReport::render() const {
    std::ostringstream out;
    out << "delta=" << delta << " t=" << t << " k=" << k << " theorem=" << theorem_name(theorem)
        << " guarantee=" << to_string(guarantee) << " forbidden=" << forbidden_list();
    return out.str();
}

namespace {

int collapse_parameter(int delta, int t) { return std::min(delta, 2 * (t - delta) + 1); }

/// Exact-match test against (c,c,c) or (c,c,c+1) pair multiplicities on a
/// 3-vertex graph; used for the "G equals the bottleneck graph" exclusions.
bool equals_bottleneck(const Multigraph& g, int delta) {
    if (g.vertex_count() != 3) return false;
    std::array<int, 3> mult = {g.multiplicity(0, 1), g.multiplicity(0, 2), g.multiplicity(1, 2)};
    std::sort(mult.begin(), mult.end());
    if (delta % 2 == 0) {
        int c = delta / 2;
        return mult[0] == c && mult[1] == c && mult[2] == c;
    }
    int c = (delta - 1) / 2;
    return mult[0] == c && mult[1] == c && mult[2] == c + 1;
}

} // namespace

BoundReport plan_guarantee(const Multigraph& g) {
    BoundReport report;
    report.delta = g.max_degree();
    report.t_measured = g.max_triangle_density();

    const int delta = report.delta;
    if (delta == 0) {
        report.guarantee = {1, 1};
        report.theorem = Theorem::shannon;
        report.note = "edgeless";
        return report;
    }

    if (delta >= 4) {
        if (delta % 2 == 0) {
            if (auto w = g.contains_ck3(delta / 2)) {
                report.forbidden_even = true;
                report.forbidden_witness = w;
            }
        } else {
            if (auto w = g.contains_ck3_plus_e((delta - 1) / 2)) {
                report.forbidden_odd = true;
                report.forbidden_witness = w;
            }
        }
    }
    const bool forbidden = report.forbidden_even || report.forbidden_odd;

    // Shannon is always available.
    report.theorem = Theorem::shannon;
    report.guarantee = shannon_fraction(delta);
    report.t = 3 * delta / 2;
    report.k = collapse_parameter(delta, report.t);

    auto consider = [&](Theorem id, Rational fraction, int t_used) {
        if (fraction > report.guarantee) {
            report.theorem = id;
            report.guarantee = fraction;
            report.t = t_used;
            report.k = collapse_parameter(delta, t_used);
        }
    };

    if (delta >= 4 && !forbidden)
        consider(Theorem::forbidden_free, beyond_shannon_fraction(delta), 3 * delta / 2 - 1);

    // The connected bound for delta=3 comes from prior work and is not
    // implemented here, so it only enters the candidate set from delta=4 up.
    if (delta >= 4 && g.connected() && !equals_bottleneck(g, delta))
        consider(Theorem::connected, connected_fraction(delta), 3 * delta / 2 - 1);

    if (delta >= 6) {
        int t1 = std::max(report.t_measured, density_threshold(delta));
        t1 = std::max(t1, delta + 1);
        if (t1 <= 3 * delta / 2) consider(Theorem::triangle_density, Rational{delta, t1}, t1);
    }

    if (delta <= 3) report.note = "subcubic improvements out of scope; Shannon only";
    return report;
}

Rational palette_guarantee(const BoundReport& report, int palette) {
    if (palette < report.delta) return {0, 1};
    Rational floor_k = std::min(Rational{1, 1}, Rational{palette, std::max(1, 3 * report.delta / 2)});
    return std::max(report.guarantee, floor_k);
}

} // namespace ecsub
