#include "hdran/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "hdran/error.hpp"
#include "hdran/metrics.hpp"
#include "hdran/network.hpp"
#include "hdran/rng.hpp"

namespace hdran::experiments {

std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t index) {
    return splitmix64_mix(master_seed ^ splitmix64_mix(index + 0x9e3779b97f4a7c15ULL));
}

namespace {

// Runs body(i) for i in [0, count), strided across workers.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body) {
    threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count)));
    if (threads == 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t i = w; i < count; i += threads) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

void check_arena(int k, std::uint64_t n, const ResourceBudget& budget) {
    const auto uk = static_cast<std::uint64_t>(k);
    if (saturating_mul(uk, 1 + saturating_mul(uk, n)) > budget.max_arena_cells) {
        throw ResourceError("network (k = " + std::to_string(k) + ", n = " + std::to_string(n) +
                            ") exceeds the clique-arena budget; raise HDRAN_MAX_ARENA_CELLS to allow it");
    }
}

}  // namespace

std::uint64_t estimated_work(const ReplicateConfig& config) {
    const auto uk = static_cast<std::uint64_t>(config.k);
    const std::uint64_t vertices = config.n + uk;
    std::uint64_t per_rep = saturating_mul(uk, config.n);
    if (config.measurements.clustering) per_rep += saturating_mul(uk * uk, config.n);
    if (config.measurements.distances) per_rep += saturating_mul(vertices, vertices);
    return saturating_mul(per_rep, config.reps);
}

std::vector<ReplicateSummary> run_replicates(const ReplicateConfig& config, const ResourceBudget& budget) {
    if (config.reps < 1) throw DomainError("reps must be >= 1");
    if (config.k < 3) throw DomainError("index k must be >= 3");
    check_arena(config.k, config.n, budget);
    if (config.measurements.distances && config.n + config.k > budget.exact_distance_vertices) {
        throw ResourceError("exact distances for " + std::to_string(config.n + config.k) +
                            " vertices exceed the exact-distance limit");
    }
    const std::uint64_t work = estimated_work(config);
    if (!config.long_run && work > budget.max_work_units) {
        throw ResourceError("experiment needs ~" + std::to_string(work) + " work units, above the budget of " +
                            std::to_string(budget.max_work_units) + "; pass --long or reduce n/reps");
    }

    std::vector<ReplicateSummary> out(config.reps);
    parallel_for(config.reps, config.threads, [&](std::uint64_t i) {
        ReplicateSummary& s = out[i];
        s.replicate_index = i;
        s.seed = replicate_seed(config.master_seed, i);
        const Network net = generate(config.k, config.n, s.seed, budget);
        const auto hist = metrics::degree_histogram(net);
        s.degree_counts = hist.counts_all;
        s.newcomer_degree_counts = hist.counts_newcomers;
        const double total = static_cast<double>(net.vertex_count());
        for (const auto& [d, c] : hist.counts_all) s.degree_fractions[d] = static_cast<double>(c) / total;
        const auto degrees = metrics::degree_sequence(net);
        s.gini = metrics::empirical_lorenz_gini(degrees).gini;
        s.gini_class = metrics::class_based_lorenz(hist).gini;
        s.total_depth = clique_census(net).total_depth;
        if (config.measurements.clustering) s.clustering_avg = metrics::clustering_profile(net).average;
        if (config.measurements.distances) {
            const auto d = metrics::distance_metrics(net, metrics::ExactDistances{}, budget);
            s.wiener = d.wiener;
            s.diameter = d.diameter;
        }
    });
    return out;
}

MeanAndError mean_and_error(const std::vector<double>& values) {
    if (values.empty()) throw DomainError("mean of an empty sample");
    long double sum = 0.0L;
    for (double v : values) sum += v;
    const long double mean = sum / values.size();
    MeanAndError out{static_cast<double>(mean), 0.0};
    if (values.size() > 1) {
        long double ss = 0.0L;
        for (double v : values) ss += (v - mean) * (v - mean);
        out.standard_error = static_cast<double>(std::sqrt(ss / (values.size() - 1) / values.size()));
    }
    return out;
}

namespace {

ValidationRow make_row(std::string metric, const MeanAndError& m, double theory, double tolerance, bool enforced) {
    ValidationRow row;
    row.metric = std::move(metric);
    row.empirical_mean = m.mean;
    row.standard_error = m.standard_error;
    row.theory = theory;
    row.difference = m.mean - theory;
    row.tolerance = tolerance;
    row.pass = std::fabs(row.difference) <= tolerance;
    row.enforced = enforced;
    return row;
}

double count_of(const std::map<std::uint64_t, std::uint64_t>& counts, std::uint64_t j) {
    const auto it = counts.find(j);
    return it == counts.end() ? 0.0 : static_cast<double>(it->second);
}

}  // namespace

std::vector<ValidationRow> validate_against_theory(const std::vector<ReplicateSummary>& summaries,
                                                   const theory::TheoryReport& report,
                                                   const ValidationOptions& options) {
    if (summaries.empty()) throw DomainError("no replicate summaries to validate");
    const int k = report.k;
    const std::uint64_t n = report.n;
    for (const auto& s : summaries) {
        std::uint64_t vertices = 0;
        for (const auto& [d, c] : s.degree_counts) vertices += c;
        if (vertices != n + static_cast<std::uint64_t>(k) || (n >= 1 && s.degree_counts.begin()->first < static_cast<std::uint64_t>(k))) {
            throw DomainError("replicate summaries do not match the theory report's (k, n)");
        }
    }
    const int j_min = options.j_min > 0 ? options.j_min : k;
    const int j_max = options.j_max > 0 ? options.j_max : k + 7;
    const double l1 = theory::degree_l1_bound(k);
    const double nd = static_cast<double>(n);
    // The recursion for b_{j,k} weighs a degree-j vertex by j; that matches the
    // number of active cliques containing it only when k = 3 or j = k.
    const auto profile = theory::expected_degree_profile(n, k, static_cast<std::uint64_t>(j_max));

    std::vector<ValidationRow> rows;
    for (int j = j_min; j <= j_max; ++j) {
        const auto uj = static_cast<std::uint64_t>(j);
        std::vector<double> all, newcomers;
        for (const auto& s : summaries) {
            all.push_back(count_of(s.degree_counts, uj));
            newcomers.push_back(count_of(s.newcomer_degree_counts, uj));
        }
        const auto m_all = mean_and_error(all);
        const auto m_new = mean_and_error(newcomers);
        const bool recurrence_exact = k == 3 || j == k;
        rows.push_back(make_row("degree_" + std::to_string(j), m_all, theory::limit_fraction_value(j, k) * nd,
                                l1 + 3.0 * m_all.standard_error, recurrence_exact));
        if (static_cast<std::uint64_t>(j - k) < profile.size()) {
            rows.push_back(make_row("degree_" + std::to_string(j) + "_rec", m_new,
                                    profile[static_cast<std::size_t>(j - k)],
                                    3.0 * m_new.standard_error + 1e-9, recurrence_exact));
        }
        rows.push_back(make_row("degree_" + std::to_string(j) + "_cw", m_all,
                                theory::clique_weighted_limit_fraction(j, k) * nd, l1 + 3.0 * m_all.standard_error,
                                k > 3));
    }

    std::vector<double> clustering;
    for (const auto& s : summaries) {
        if (s.clustering_avg) clustering.push_back(*s.clustering_avg);
    }
    if (!clustering.empty()) {
        const auto m = mean_and_error(clustering);
        const double tol = std::max(0.005, 3.0 * m.standard_error);
        rows.push_back(make_row("clustering", m, report.clustering_limit, tol, k == 3));
        if (k > 3) {
            rows.push_back(make_row("clustering_cw", m, theory::clique_weighted_clustering_limit(k), tol, true));
        }
    }

    std::vector<double> gini, gini_class, depth;
    for (const auto& s : summaries) {
        gini.push_back(s.gini);
        gini_class.push_back(s.gini_class);
        depth.push_back(static_cast<double>(s.total_depth));
    }
    const auto mg = mean_and_error(gini);
    rows.push_back(make_row("gini_vertex", mg, report.gini_closed_form, std::max(0.001, 3.0 * mg.standard_error), false));
    const auto mc = mean_and_error(gini_class);
    rows.push_back(make_row("gini_class", mc, report.gini_closed_form, std::max(0.001, 3.0 * mc.standard_error), false));
    const auto md = mean_and_error(depth);
    rows.push_back(make_row("total_depth", md, report.depth_mean, 3.0 * md.standard_error, true));
    return rows;
}

std::vector<double> default_lambda_grid(int k, std::uint64_t n, std::size_t count, double max_factor) {
    if (count < 2) throw DomainError("lambda grid needs at least two points");
    const double top = max_factor * std::sqrt(8.0 * k * static_cast<double>(n));
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = top * static_cast<double>(i) / static_cast<double>(count - 1);
    return grid;
}

ConcentrationResult concentration_probe(int k, std::uint64_t n, std::uint64_t reps, std::uint64_t master_seed,
                                        std::uint64_t j, const std::vector<double>& lambda_grid, unsigned threads) {
    if (reps < 2) throw DomainError("concentration probe needs at least two replicates");
    if (j < static_cast<std::uint64_t>(k)) throw DomainError("degree j must be >= k");
    std::vector<double> x(reps);
    parallel_for(reps, threads, [&](std::uint64_t i) {
        const Network net = generate(k, n, replicate_seed(master_seed, i));
        std::uint64_t count = 0;
        for (VertexId v = 0; v < net.vertex_count(); ++v) count += net.degree(v) == j ? 1 : 0;
        x[i] = static_cast<double>(count);
    });
    ConcentrationResult out;
    out.mean = mean_and_error(x).mean;
    const double r = static_cast<double>(reps);
    for (double lambda : lambda_grid) {
        ConcentrationRow row;
        row.lambda = lambda;
        std::uint64_t hits = 0;
        for (double v : x) hits += std::fabs(v - out.mean) >= lambda ? 1 : 0;
        row.empirical = static_cast<double>(hits) / r;
        row.bound = std::exp(-lambda * lambda / (8.0 * k * static_cast<double>(n)));
        // Binomial SE evaluated at the bound, the null hypothesis being tested.
        const double p = std::min(1.0, row.bound);
        row.standard_error = std::sqrt(p * (1.0 - p) / r);
        row.violated = row.empirical > row.bound + 3.0 * row.standard_error;
        out.rows.push_back(row);
    }
    return out;
}

NormalityResult normality_test(const std::vector<double>& samples) {
    const std::size_t count = samples.size();
    if (count < 20) throw DomainError("normality test needs at least 20 samples");
    long double mean = 0.0L;
    for (double v : samples) mean += v;
    mean /= count;
    long double m2 = 0.0L, m3 = 0.0L, m4 = 0.0L;
    for (double v : samples) {
        const long double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= count;
    m3 /= count;
    m4 /= count;
    if (!(m2 > 0.0L)) throw DomainError("normality test on a sample with zero variance");
    const double n = static_cast<double>(count);
    const double g1 = static_cast<double>(m3 / std::pow(m2, 1.5L));
    const double b2 = static_cast<double>(m4 / (m2 * m2));

    // Skewness component.
    const double y = g1 * std::sqrt((n + 1) * (n + 3) / (6.0 * (n - 2)));
    const double beta2 = 3.0 * (n * n + 27 * n - 70) * (n + 1) * (n + 3) / ((n - 2) * (n + 5) * (n + 7) * (n + 9));
    const double w2 = -1.0 + std::sqrt(2.0 * (beta2 - 1.0));
    const double delta = 1.0 / std::sqrt(std::log(std::sqrt(w2)));
    const double alpha = std::sqrt(2.0 / (w2 - 1.0));
    const double z1 = delta * std::asinh(y / alpha);

    // Kurtosis component (Anscombe-Glynn).
    const double e = 3.0 * (n - 1) / (n + 1);
    const double var = 24.0 * n * (n - 2) * (n - 3) / ((n + 1) * (n + 1) * (n + 3) * (n + 5));
    const double x = (b2 - e) / std::sqrt(var);
    const double sqrt_beta1 =
        6.0 * (n * n - 5 * n + 2) / ((n + 7) * (n + 9)) * std::sqrt(6.0 * (n + 3) * (n + 5) / (n * (n - 2) * (n - 3)));
    const double a = 6.0 + 8.0 / sqrt_beta1 * (2.0 / sqrt_beta1 + std::sqrt(1.0 + 4.0 / (sqrt_beta1 * sqrt_beta1)));
    const double term = (1.0 - 2.0 / a) / (1.0 + x * std::sqrt(2.0 / (a - 4.0)));
    const double z2 = ((1.0 - 2.0 / (9.0 * a)) - std::cbrt(term)) / std::sqrt(2.0 / (9.0 * a));

    NormalityResult out;
    out.statistic = z1 * z1 + z2 * z2;
    out.p_value = std::exp(-out.statistic / 2.0);
    out.skewness = g1;
    out.kurtosis = b2;
    return out;
}

std::vector<HistogramBin> histogram(const std::vector<double>& samples, std::size_t bins) {
    if (samples.empty()) throw DomainError("histogram of an empty sample");
    if (bins == 0) throw DomainError("histogram needs at least one bin");
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *lo_it;
    double hi = *hi_it;
    if (hi == lo) hi = lo + 1.0;
    const double width = (hi - lo) / static_cast<double>(bins);
    std::vector<HistogramBin> out(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        out[b].lower = lo + width * static_cast<double>(b);
        out[b].upper = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
    }
    for (double v : samples) {
        auto b = static_cast<std::size_t>((v - lo) / width);
        ++out[std::min(b, bins - 1)].count;
    }
    return out;
}

WienerStudy wiener_study(int k, std::uint64_t n, std::uint64_t reps, std::uint64_t master_seed, bool long_run,
                         const ResourceBudget& budget, unsigned threads, std::size_t bins) {
    ReplicateConfig config;
    config.k = k;
    config.n = n;
    config.reps = reps;
    config.master_seed = master_seed;
    config.measurements.distances = true;
    config.threads = threads;
    config.long_run = long_run;
    const auto summaries = run_replicates(config, budget);

    WienerStudy study;
    study.k = k;
    study.n = n;
    std::vector<double> values;
    for (const auto& s : summaries) {
        study.samples.push_back(*s.wiener);
        study.diameters.push_back(*s.diameter);
        values.push_back(static_cast<double>(*s.wiener));
    }
    study.mean = mean_and_error(values).mean;
    study.bins = histogram(values, bins);
    if (values.size() >= 20) {
        study.normality = normality_test(values);
        study.skewness = study.normality.skewness;
    }
    if (k == 3 && n > 0) {
        const double dominant = std::sqrt(3.0 * std::numbers::pi) * std::pow(static_cast<double>(n), 2.5) / 22.0;
        study.trend_ratio = study.mean / dominant;
    }
    return study;
}

double log_log_slope(const std::map<std::uint64_t, double>& fractions, std::uint64_t lo, std::uint64_t hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (const auto& [j, f] : fractions) {
        if (j < lo || j > hi || !(f > 0.0)) continue;
        const double x = std::log(static_cast<double>(j));
        const double y = std::log(f);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 2) throw DomainError("log-log slope needs at least two positive points in range");
    const double md = static_cast<double>(m);
    return (md * sxy - sx * sy) / (md * sxx - sx * sx);
}

}  // namespace hdran::experiments
