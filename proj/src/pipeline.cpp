#include "ecsub/pipeline.hpp"

#include <algorithm>

namespace ecsub {

ColorRun color_graph(const Multigraph& g, int palette, const EngineOptions& options) {
    ColorRun run;
    run.report = plan_guarantee(g);
    run.palette = palette > 0 ? palette : std::max(1, run.report.delta);

    CollapseResult cr = collapse_all(g, run.report.k);
    run.collapsed = cr.collapsed;
    run.records = std::move(cr.records);

    EngineOptions engine_options = options;
    engine_options.target_fraction = palette_guarantee(run.report, run.palette);
    run.engine = maximize_potential(run.collapsed, run.palette, engine_options);

    run.coloring = lift_coloring(run.collapsed, run.records, run.engine.coloring);

    Rational frac = palette_guarantee(run.report, run.palette);
    long long required = (frac.numerator() * g.edge_count() + frac.denominator() - 1) / frac.denominator();
    run.required_colored = static_cast<int>(std::max<long long>(0, required));
    run.bound_met = run.coloring.colored_count() >= run.required_colored;
    return run;
}

} // namespace ecsub
