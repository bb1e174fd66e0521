#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdran/budget.hpp"
#include "hdran/csv.hpp"
#include "hdran/error.hpp"
#include "hdran/experiments.hpp"
#include "hdran/metrics.hpp"
#include "hdran/network.hpp"
#include "hdran/network_io.hpp"
#include "hdran/theory.hpp"
#include "svg.hpp"

namespace hdran::cli {

namespace {

using io::CsvTable;
using io::format_double;

const CLI::Validator kIndexValidator(
    [](std::string& value) -> std::string {
        try {
            if (std::stoll(value) >= 3) return {};
        } catch (const std::exception&) {
            return "index k must be an integer >= 3";
        }
        return "index k must be >= 3 (k = 1, 2 are excluded), got " + value;
    },
    "INT>=3");

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

struct GenerateOptions {
    int k = 3;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_generate(const GenerateOptions& o) {
    const auto budget = ResourceBudget::from_environment();
    const Network net = generate(o.k, o.n, o.seed, budget);
    io::save_network(net, o.out);
    const auto census = clique_census(net);
    std::cout << "k=" << net.index_k() << " n=" << net.time_n() << " seed=" << net.seed_value()
              << " vertices=" << net.vertex_count() << " edges=" << net.edge_count()
              << " active_cliques=" << net.active_count() << " total_depth=" << census.total_depth << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct StatsOptions {
    std::string in;
    std::string out_prefix = "";
    std::string distances = "auto";
    std::uint64_t sources = 256;
    std::uint64_t distance_seed = 0;
    unsigned threads = 1;
};

constexpr std::uint64_t kAutoExactDistanceVertices = 5000;

int cmd_stats(const StatsOptions& o) {
    const auto budget = ResourceBudget::from_environment();
    const Network net = io::load_network(o.in);
    const int k = net.index_k();
    const auto hist = metrics::degree_histogram(net);
    const double vertices = static_cast<double>(net.vertex_count());

    std::set<std::uint64_t> degrees;
    for (const auto& [d, c] : hist.counts_all) degrees.insert(d);
    CsvTable degree_table({"j", "count_all", "count_newcomers", "fraction", "theory_b"});
    for (std::uint64_t d : degrees) {
        const auto all = hist.counts_all.count(d) ? hist.counts_all.at(d) : 0;
        const auto fresh = hist.counts_newcomers.count(d) ? hist.counts_newcomers.at(d) : 0;
        io::CsvCell b = std::string();
        if (d >= static_cast<std::uint64_t>(k)) b = theory::limit_fraction_value(static_cast<int>(d), k);
        degree_table.add_row({d, all, fresh, static_cast<double>(all) / vertices, b});
    }
    degree_table.write(o.out_prefix + "degree_hist.csv");

    std::optional<metrics::ClusteringProfile> clustering;
    if (net.time_n() >= 1) {
        clustering = metrics::clustering_profile(net);
        CsvTable table({"degree", "vertices", "mean_coefficient", "newcomer_closed_form"});
        for (const auto& [d, c] : clustering->by_degree) {
            io::CsvCell closed = std::string();
            if (d >= static_cast<std::uint64_t>(k)) closed = theory::newcomer_clustering(d, k);
            table.add_row({d, hist.counts_all.at(d), c, closed});
        }
        table.write(o.out_prefix + "clustering.csv");
    }

    const auto degree_seq = metrics::degree_sequence(net);
    const auto lorenz = metrics::empirical_lorenz_gini(degree_seq);
    CsvTable lorenz_table({"position", "cumulative"});
    for (const auto& [p, c] : lorenz.points) lorenz_table.add_row({p, c});
    lorenz_table.write(o.out_prefix + "lorenz.csv");

    const auto census = clique_census(net);
    CsvTable summary({"metric", "value"});
    summary.add_row({std::string("k"), static_cast<std::uint64_t>(k)});
    summary.add_row({std::string("n"), net.time_n()});
    summary.add_row({std::string("seed"), net.seed_value()});
    summary.add_row({std::string("vertices"), net.vertex_count()});
    summary.add_row({std::string("edges"), net.edge_count()});
    summary.add_row({std::string("active_cliques"), census.active_count});
    summary.add_row({std::string("total_depth"), census.total_depth});
    summary.add_row({std::string("gini"), lorenz.gini});
    summary.add_row({std::string("gini_class"), metrics::class_based_lorenz(hist).gini});
    if (net.time_n() >= 1) {
        summary.add_row({std::string("gini_theory"), theory::theoretical_gini(net.time_n(), k)});
        summary.add_row({std::string("clustering_avg"), clustering->average});
        summary.add_row({std::string("clustering_newcomer_avg"), clustering->newcomer_average});
    }

    std::string mode = o.distances;
    if (mode == "auto") mode = net.vertex_count() <= kAutoExactDistanceVertices ? "exact" : "none";
    if (mode != "none") {
        metrics::DistanceMode dm = metrics::ExactDistances{};
        if (mode == "sampled") dm = metrics::SampledDistances{o.sources, o.distance_seed};
        const auto d = metrics::distance_metrics(net, dm, budget, o.threads);
        summary.add_row({std::string(d.exact ? "wiener" : "wiener_estimate"),
                         d.exact ? io::CsvCell{d.wiener} : io::CsvCell{d.wiener_estimate}});
        summary.add_row({std::string(d.exact ? "diameter" : "diameter_lower_bound"),
                         static_cast<std::uint64_t>(d.diameter)});
        summary.add_row({std::string("distance_sources"), d.source_count});
    }
    summary.write(o.out_prefix + "summary.csv");
    std::cout << summary.to_string();
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct TheoryOptions {
    int k = 3;
    std::uint64_t n = 100;
    int j_max = 0;
    std::string out;
};

int cmd_theory(const TheoryOptions& o) {
    const int j_max = o.j_max > 0 ? o.j_max : o.k + 10;
    const auto r = theory::make_theory_report(o.k, o.n, j_max);
    CsvTable table({"quantity", "index", "value", "exact"});
    const std::string none;
    for (const auto& [j, b] : r.b_fractions) {
        table.add_row({std::string("b"), static_cast<std::uint64_t>(j), b.second, b.first.str()});
    }
    for (const auto& [j, x] : r.expected_counts) {
        table.add_row({std::string("expected_count"), static_cast<std::uint64_t>(j), x, none});
    }
    for (int j = o.k; j <= j_max; ++j) {
        table.add_row({std::string("b_clique_weighted"), static_cast<std::uint64_t>(j),
                       theory::clique_weighted_limit_fraction(j, o.k), none});
    }
    const auto scalar = [&](const char* name, double v) { table.add_row({std::string(name), std::string(), v, none}); };
    scalar("clustering_limit", r.clustering_limit);
    scalar("clustering_limit_clique_weighted", theory::clique_weighted_clustering_limit(o.k));
    scalar("gini_closed_form", r.gini_closed_form);
    scalar("gini_quoted", r.gini_quoted);
    scalar("expected_total_depth", r.depth_mean);
    scalar("total_depth_second_moment", r.depth_second_moment);
    scalar("total_depth_second_moment_expansion", theory::total_depth_second_moment_expansion(o.n, o.k));
    scalar("eta_star", r.diameter.eta_star);
    scalar("diameter_upper_bound_constant", r.diameter.upper_bound_constant);
    scalar("a", r.diameter.a);
    scalar("height_constant", r.diameter.height_constant);
    scalar("c", r.diameter.c);
    scalar("eta_residual", r.diameter.eta_residual);
    scalar("a_residual", r.diameter.a_residual);
    for (std::size_t i = 0; i < r.lorenz_points.size(); ++i) {
        table.add_row({std::string("lorenz_cumulative"), static_cast<std::uint64_t>(i), r.lorenz_points[i].cumulative,
                       none});
    }
    if (!o.out.empty()) table.write(o.out);

    std::cout << "k = " << r.k << ", n = " << r.n << "\n"
              << "clustering_limit = " << format_double(r.clustering_limit) << "\n"
              << "gini_closed_form = " << format_double(r.gini_closed_form) << "\n"
              << "gini_quoted = " << format_double(r.gini_quoted) << "\n"
              << "expected_total_depth = " << format_double(r.depth_mean) << "\n"
              << "total_depth_second_moment = " << format_double(r.depth_second_moment) << "\n"
              << "eta_star = " << format_double(r.diameter.eta_star) << "\n"
              << "a = " << format_double(r.diameter.a) << "\n"
              << "height_constant = " << format_double(r.diameter.height_constant) << "\n"
              << "c = " << format_double(r.diameter.c) << "\n";
    for (const auto& [j, b] : r.b_fractions) {
        std::cout << "b[" << j << "] = " << b.first.str() << " = " << format_double(b.second) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ValidateOptions {
    int k = 3;
    std::uint64_t n = 10000;
    std::uint64_t reps = 50;
    std::uint64_t seed = 0;
    bool long_run = false;
    bool no_clustering = false;
    int j_min = 0;
    int j_max = 0;
    unsigned threads = 1;
    std::string out;
};

int cmd_validate(const ValidateOptions& o) {
    const auto budget = ResourceBudget::from_environment();
    experiments::ReplicateConfig config;
    config.k = o.k;
    config.n = o.n;
    config.reps = o.reps;
    config.master_seed = o.seed;
    config.measurements.clustering = !o.no_clustering;
    config.threads = o.threads;
    config.long_run = o.long_run;
    const int j_max = o.j_max > 0 ? o.j_max : o.k + 7;
    const auto summaries = experiments::run_replicates(config, budget);
    const auto report = theory::make_theory_report(o.k, o.n, j_max);
    const auto rows = experiments::validate_against_theory(summaries, report, {o.j_min, j_max});

    CsvTable table({"metric", "empirical_mean", "standard_error", "theory", "difference", "tolerance", "pass",
                    "enforced"});
    bool ok = true;
    for (const auto& row : rows) {
        table.add_row({row.metric, row.empirical_mean, row.standard_error, row.theory, row.difference, row.tolerance,
                       yes_no(row.pass), yes_no(row.enforced)});
        if (row.enforced && !row.pass) ok = false;
    }
    if (!o.out.empty()) table.write(o.out);
    std::cout << table.to_string();
    std::cout << (ok ? "validation passed" : "validation FAILED") << "\n";
    return ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------------------

struct WienerOptions {
    int k = 3;
    std::uint64_t n = 0;
    std::uint64_t reps = 0;
    std::uint64_t seed = 0;
    bool long_run = false;
    std::size_t bins = 30;
    unsigned threads = 1;
    std::string out_prefix;
};

int cmd_wiener(const WienerOptions& o) {
    const auto budget = ResourceBudget::from_environment();
    const std::uint64_t n = o.n > 0 ? o.n : (o.long_run ? 2000 : 500);
    const std::uint64_t reps = o.reps > 0 ? o.reps : (o.long_run ? 500 : 200);
    const auto study = experiments::wiener_study(o.k, n, reps, o.seed, o.long_run, budget, o.threads, o.bins);

    CsvTable samples({"replicate", "seed", "wiener", "diameter"});
    for (std::size_t i = 0; i < study.samples.size(); ++i) {
        samples.add_row({static_cast<std::uint64_t>(i), experiments::replicate_seed(o.seed, i), study.samples[i],
                         static_cast<std::uint64_t>(study.diameters[i])});
    }
    samples.write(o.out_prefix + "samples.csv");
    CsvTable hist({"lower", "upper", "count"});
    for (const auto& b : study.bins) hist.add_row({b.lower, b.upper, b.count});
    hist.write(o.out_prefix + "histogram.csv");

    const bool reject = study.normality.p_value < 0.01;
    CsvTable summary({"metric", "value"});
    summary.add_row({std::string("k"), static_cast<std::uint64_t>(o.k)});
    summary.add_row({std::string("n"), n});
    summary.add_row({std::string("reps"), reps});
    summary.add_row({std::string("mean"), study.mean});
    summary.add_row({std::string("skewness"), study.skewness});
    summary.add_row({std::string("kurtosis"), study.normality.kurtosis});
    summary.add_row({std::string("normality_statistic"), study.normality.statistic});
    summary.add_row({std::string("p_value"), study.normality.p_value});
    summary.add_row({std::string("reject_normality_at_0.01"), yes_no(reject)});
    if (study.trend_ratio) summary.add_row({std::string("trend_ratio"), *study.trend_ratio});
    summary.write(o.out_prefix + "summary.csv");
    std::cout << summary.to_string();
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct LorenzOptions {
    std::vector<int> ks{3};
    std::uint64_t n = 5000;
    std::uint64_t reps = 100;
    std::uint64_t seed = 0;
    std::string svg;
    std::string csv;
    std::size_t max_points = 501;
    bool long_run = false;
};

int cmd_lorenz(const LorenzOptions& o) {
    const auto budget = ResourceBudget::from_environment();
    std::vector<Polyline> curves;
    CsvTable table({"k", "position", "cumulative"});
    for (int k : o.ks) {
        if (k < 3) throw DomainError("index k must be >= 3");
        experiments::ReplicateConfig cost{k, o.n, o.reps, o.seed, {}, 1, o.long_run};
        if (!o.long_run && experiments::estimated_work(cost) > budget.max_work_units) {
            throw ResourceError("lorenz run exceeds the work budget; pass --long or reduce n/reps");
        }
        const std::size_t points = static_cast<std::size_t>(o.n) + static_cast<std::size_t>(k) + 1;
        std::vector<long double> sum(points, 0.0L);
        std::vector<double> positions(points, 0.0);
        for (std::uint64_t i = 0; i < o.reps; ++i) {
            const Network net = generate(k, o.n, experiments::replicate_seed(o.seed, i), budget);
            const auto curve = metrics::empirical_lorenz_gini(metrics::degree_sequence(net));
            for (std::size_t p = 0; p < points; ++p) {
                sum[p] += curve.points[p].second;
                positions[p] = curve.points[p].first;
            }
        }
        std::vector<std::pair<double, double>> averaged(points);
        for (std::size_t p = 0; p < points; ++p) {
            averaged[p] = {positions[p], static_cast<double>(sum[p] / static_cast<long double>(o.reps))};
        }
        const auto thinned = thin(averaged, o.max_points);
        for (const auto& [x, y] : thinned) table.add_row({static_cast<std::uint64_t>(k), x, y});
        curves.push_back({"k = " + std::to_string(k), thinned});
    }
    io::write_text_file(o.svg, lorenz_svg(curves));
    if (!o.csv.empty()) table.write(o.csv);
    std::cout << "wrote " << curves.size() << " Lorenz curve(s) to " << o.svg << "\n";
    return kExitOk;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"High-dimensional random Apollonian network simulator and theory toolkit", "hdran"};
    app.require_subcommand(1);
    int status = kExitOk;

    GenerateOptions gen;
    auto* g = app.add_subcommand("generate", "Grow a network and save it as JSON");
    g->add_option("--k", gen.k, "Network index (clique size), >= 3")->required()->check(kIndexValidator);
    g->add_option("--n", gen.n, "Number of evolution steps")->required();
    g->add_option("--seed", gen.seed, "64-bit seed");
    g->add_option("--out", gen.out, "Output file")->required();
    g->callback([&] { status = cmd_generate(gen); });

    StatsOptions st;
    auto* s = app.add_subcommand("stats", "Empirical statistics of a saved network");
    s->add_option("--in", st.in, "Network file")->required();
    s->add_option("--out-prefix", st.out_prefix, "Prefix prepended to the output CSV names");
    s->add_option("--distances", st.distances, "Distance mode")
        ->check(CLI::IsMember({"auto", "exact", "sampled", "none"}));
    s->add_option("--sources", st.sources, "Sources for sampled distances")->check(CLI::PositiveNumber);
    s->add_option("--distance-seed", st.distance_seed, "Seed for source sampling");
    s->add_option("--threads", st.threads, "Worker threads for BFS")->check(CLI::PositiveNumber);
    s->callback([&] { status = cmd_stats(st); });

    TheoryOptions th;
    auto* t = app.add_subcommand("theory", "Evaluate the closed forms for (k, n)");
    t->add_option("--k", th.k, "Network index, >= 3")->required()->check(kIndexValidator);
    t->add_option("--n", th.n, "Time n")->check(CLI::PositiveNumber);
    t->add_option("--j-max", th.j_max, "Largest degree in the tables (default k + 10)");
    t->add_option("--out", th.out, "CSV output file");
    t->callback([&] { status = cmd_theory(th); });

    ValidateOptions va;
    auto* v = app.add_subcommand("validate", "Monte Carlo replicates against theory");
    v->add_option("--k", va.k, "Network index, >= 3")->check(kIndexValidator);
    v->add_option("--n", va.n, "Time n")->check(CLI::PositiveNumber);
    v->add_option("--reps", va.reps, "Replicates")->check(CLI::PositiveNumber);
    v->add_option("--seed", va.seed, "Master seed");
    v->add_flag("--long", va.long_run, "Allow runs above the work budget");
    v->add_flag("--no-clustering", va.no_clustering, "Skip clustering measurement");
    v->add_option("--j-min", va.j_min, "Smallest degree row (default k)");
    v->add_option("--j-max", va.j_max, "Largest degree row (default k + 7)");
    v->add_option("--threads", va.threads, "Worker threads")->check(CLI::PositiveNumber);
    v->add_option("--out", va.out, "CSV output file");
    v->callback([&] { status = cmd_validate(va); });

    WienerOptions wi;
    auto* w = app.add_subcommand("wiener-study", "Exact Wiener indices and a normality test");
    w->add_option("--k", wi.k, "Network index, >= 3")->check(kIndexValidator);
    w->add_option("--n", wi.n, "Time n (default 500, or 2000 with --long)");
    w->add_option("--reps", wi.reps, "Replicates (default 200, or 500 with --long)");
    w->add_option("--seed", wi.seed, "Master seed");
    w->add_flag("--long", wi.long_run, "Long run (n = 2000, 500 reps), skips the work budget");
    w->add_option("--bins", wi.bins, "Histogram bins")->check(CLI::PositiveNumber);
    w->add_option("--threads", wi.threads, "Worker threads")->check(CLI::PositiveNumber);
    w->add_option("--out-prefix", wi.out_prefix, "Prefix prepended to the output CSV names");
    w->callback([&] { status = cmd_wiener(wi); });

    LorenzOptions lo;
    auto* l = app.add_subcommand("lorenz", "Averaged vertex-level Lorenz curves as SVG");
    l->add_option("--k", lo.ks, "Network index, repeatable")->check(kIndexValidator);
    l->add_option("--n", lo.n, "Time n");
    l->add_option("--reps", lo.reps, "Replicates per k")->check(CLI::PositiveNumber);
    l->add_option("--seed", lo.seed, "Master seed");
    l->add_option("--svg", lo.svg, "SVG output file")->required();
    l->add_option("--csv", lo.csv, "Optional CSV of the plotted points");
    l->add_option("--max-points", lo.max_points, "Points per polyline")->check(CLI::Range(2, 1'000'000));
    l->add_flag("--long", lo.long_run, "Allow runs above the work budget");
    l->callback([&] { status = cmd_lorenz(lo); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return status;
}

}  // namespace hdran::cli
