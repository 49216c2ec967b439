#include "ecsub/cli.hpp"

#include "ecsub/approx.hpp"
#include "ecsub/bounds.hpp"
#include "ecsub/io.hpp"
#include "ecsub/oracle.hpp"
#include "ecsub/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace ecsub::cli {

namespace {

struct Options {
    std::string verb;
    std::string graph_path;
    std::string coloring_path;
    std::string family;
    int c = 1;
    std::optional<int> k;
    std::optional<int> delta;
    std::optional<int> t;
    std::optional<int> rho_k;
    long long seed = 0;
    int budget = -1;
    int jobs = 1;
    bool verbose = false;
};

int run_gen(const Options& opt, std::ostream& out, std::ostream& err) {
    auto family = family_from_name(opt.family);
    if (!family) {
        err << "unknown family '" << opt.family << "' (expect cK3, cK3PlusE, cK3MinusE, joinedTwins, petersen)\n";
        return 1;
    }
    if (*family != Family::petersen && opt.c < 1) {
        err << "family parameter must be >= 1\n";
        return 1;
    }
    Multigraph g = generate(*family, opt.c);
    out << "# " << family_name(*family) << " c=" << opt.c << "\n";
    write_multigraph(out, g);
    return 0;
}

int run_color(const Options& opt, std::ostream& out, std::ostream& err) {
    Multigraph g = read_multigraph_file(opt.graph_path);
    EngineOptions engine_options;
    engine_options.budget = opt.budget;
    if (opt.verbose) engine_options.diag = &err;
    ColorRun run = color_graph(g, opt.k.value_or(0), engine_options);

    write_coloring(out, run.coloring);
    out << "r " << run.report.render() << "\n";
    out << "cert " << (run.engine.certification.pass ? "pass" : "fail");
    if (run.engine.uncertified) out << " uncertified";
    out << " colored " << run.coloring.colored_count() << " required " << run.required_colored << "\n";

    if (!validate(g, run.coloring).empty()) {
        err << "internal error: emitted coloring is not proper\n";
        return 2;
    }
    if (!run.engine.uncertified && !run.bound_met) {
        err << "internal error: certified run missed its guarantee\n";
        return 2;
    }
    return 0;
}

int run_verify(const Options& opt, std::ostream& out, std::ostream&) {
    Multigraph g = read_multigraph_file(opt.graph_path);
    PartialColoring col = read_coloring_file(opt.coloring_path);
    std::vector<ColoringViolation> violations = validate(g, col);
    if (violations.empty()) {
        out << "ok\n";
        return 0;
    }
    for (const ColoringViolation& v : violations) out << "violation " << v.message << "\n";
    return 1;
}

int run_oracle(const Options& opt, std::ostream& out, std::ostream& err) {
    Multigraph g = read_multigraph_file(opt.graph_path);
    int k = opt.k.value_or(std::max(1, g.max_degree()));
    try {
        OracleResult res = exact_max_kecs(g, k);
        out << "opt " << res.opt << "\n";
        write_coloring(out, res.witness);
        return 0;
    } catch (const NodeCapExceeded& e) {
        err << e.what() << "\n";
        return 1;
    }
}

int run_bounds(const Options& opt, std::ostream& out, std::ostream& err) {
    if (!opt.graph_path.empty()) {
        Multigraph g = read_multigraph_file(opt.graph_path);
        out << plan_guarantee(g).render() << "\n";
        return 0;
    }
    if (opt.delta && opt.rho_k && opt.t) {
        out << "rho=" << to_string(rho(*opt.delta, *opt.rho_k, *opt.t)) << "\n";
        return 0;
    }
    err << "bounds needs a graph file or all of --delta, --k, --t\n";
    return 1;
}

int run_approx(const Options& opt, std::ostream& out, std::ostream& err) {
    Multigraph g = read_multigraph_file(opt.graph_path);
    if (!opt.k) {
        err << "approx needs --k\n";
        return 1;
    }
    EngineOptions engine_options;
    engine_options.budget = opt.budget;
    if (opt.verbose) engine_options.diag = &err;
    ApproxResult res = approximate_kecs(g, *opt.k, engine_options);

    out << "f";
    for (int e : res.k_matching) out << " " << e;
    out << "\n";
    for (size_t i = 0; i < res.components.size(); ++i) {
        const ApproxComponent& comp = res.components[i];
        out << "comp " << i << " class " << class_name(comp.cls) << " vertices";
        for (int v : comp.vertices) out << " " << v;
        out << " edges " << comp.edges.size() << " colored " << comp.colored << "\n";
    }
    write_coloring(out, res.final_coloring);
    out << "ratio " << res.final_coloring.colored_count() << "/" << res.k_matching.size() << " guarantee "
        << to_string(res.guaranteed_fraction) << "\n";

    if (!validate(g, res.final_coloring).empty()) {
        err << "internal error: emitted coloring is not proper\n";
        return 2;
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"multigraph edge-coloring toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph) cmd->add_option("graph", opt.graph_path, "edge-list file")->required();
        cmd->add_option("--seed", opt.seed, "seed for randomized corpora");
        cmd->add_option("--budget", opt.budget, "shift-search depth");
        cmd->add_option("--jobs", opt.jobs, "worker hint (results are identical)");
        cmd->add_flag("--verbose", opt.verbose, "stream potential increases to stderr");
    };

    CLI::App* gen = app.add_subcommand("gen", "write a named instance");
    gen->add_option("family", opt.family, "cK3 | cK3PlusE | cK3MinusE | joinedTwins | petersen")->required();
    gen->add_option("--c", opt.c, "family parameter");
    add_common(gen, false);

    CLI::App* color = app.add_subcommand("color", "color a graph with the guarantee pipeline");
    add_common(color, true);
    color->add_option("--k", opt.k, "palette size (default: max degree)");

    CLI::App* verify = app.add_subcommand("verify", "check a coloring file against a graph");
    verify->add_option("graph", opt.graph_path, "edge-list file")->required();
    verify->add_option("coloring", opt.coloring_path, "coloring file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exact maximum k-colorable edge set");
    add_common(oracle, true);
    oracle->add_option("--k", opt.k, "palette size (default: max degree)");

    CLI::App* bounds = app.add_subcommand("bounds", "guarantee report, or rho for --delta --k --t");
    bounds->add_option("graph", opt.graph_path, "edge-list file");
    bounds->add_option("--delta", opt.delta, "maximum degree");
    bounds->add_option("--k", opt.rho_k, "collapse parameter");
    bounds->add_option("--t", opt.t, "triple density");

    CLI::App* approx = app.add_subcommand("approx", "maximum k-edge-colorable subgraph approximation");
    add_common(approx, true);
    approx->add_option("--k,-k", opt.k, "palette size")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (gen->parsed()) return run_gen(opt, out, err);
        if (color->parsed()) return run_color(opt, out, err);
        if (verify->parsed()) return run_verify(opt, out, err);
        if (oracle->parsed()) return run_oracle(opt, out, err);
        if (bounds->parsed()) return run_bounds(opt, out, err);
        if (approx->parsed()) return run_approx(opt, out, err);
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "no verb given\n";
    return 1;
}

} // namespace ecsub::cli
