#include "hdran/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "hdran/error.hpp"
#include "hdran/rng.hpp"

namespace hdran::metrics {

DegreeHistogram degree_histogram(const Network& net) {
    DegreeHistogram hist;
    hist.n = net.time_n();
    hist.k = net.index_k();
    const auto k = static_cast<VertexId>(net.index_k());
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
        const std::uint64_t d = net.degree(v);
        ++hist.counts_all[d];
        if (v >= k) ++hist.counts_newcomers[d];
    }
    return hist;
}

std::uint64_t label_degree(const Network& net, std::uint64_t j) { return net.degree(net.vertex_of_label(j)); }

std::uint64_t neighborhood_edges(const Network& net, VertexId v) {
    // Both endpoints lie in N(v); merge each neighbor's sorted row with N(v).
    const auto nv = net.neighbors(v);
    std::uint64_t twice = 0;
    for (VertexId u : nv) {
        const auto nu = net.neighbors(u);
        auto a = nv.begin();
        auto b = nu.begin();
        while (a != nv.end() && b != nu.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                ++twice;
                ++a;
                ++b;
            }
        }
    }
    return twice / 2;
}

ClusteringProfile clustering_profile(const Network& net) {
    ClusteringProfile out;
    const int k = net.index_k();
    const std::uint64_t base_edges = static_cast<std::uint64_t>(k) * (k - 1) / 2;
    std::map<std::uint64_t, std::pair<double, std::uint64_t>> sums;
    long double total = 0.0L;
    long double newcomer_total = 0.0L;
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
        const std::uint64_t d = net.degree(v);
        const std::uint64_t e = neighborhood_edges(net, v);
        const double c = d < 2 ? 0.0 : 2.0 * static_cast<double>(e) / (static_cast<double>(d) * (d - 1));
        if (v >= static_cast<VertexId>(k)) {
            const std::uint64_t predicted = (k - 1) * (d - k) + base_edges;
            if (e != predicted) {
                throw std::logic_error("vertex " + std::to_string(v) + " has " + std::to_string(e) +
                                       " neighborhood edges, expected " + std::to_string(predicted));
            }
            newcomer_total += c;
        }
        total += c;
        auto& slot = sums[d];
        slot.first += c;
        ++slot.second;
    }
    for (const auto& [d, acc] : sums) out.by_degree[d] = acc.first / static_cast<double>(acc.second);
    out.average = static_cast<double>(total / net.vertex_count());
    out.newcomer_average = net.time_n() == 0 ? 0.0 : static_cast<double>(newcomer_total / net.time_n());
    return out;
}

namespace {

LorenzCurve lorenz_from_sorted(const std::vector<std::uint64_t>& sorted, long double total) {
    LorenzCurve curve;
    const std::size_t m = sorted.size();
    curve.points.reserve(m + 1);
    curve.points.emplace_back(0.0, 0.0);
    long double running = 0.0L;
    long double area = 0.0L;
    long double prev = 0.0L;
    const long double width = 1.0L / static_cast<long double>(m);
    for (std::size_t i = 0; i < m; ++i) {
        running += static_cast<long double>(sorted[i]);
        const long double share = running / total;
        area += width * (prev + share) / 2;
        prev = share;
        curve.points.emplace_back(static_cast<double>((i + 1) * width), static_cast<double>(share));
    }
    curve.points.back() = {1.0, 1.0};
    curve.gini = static_cast<double>(1.0L - 2.0L * area);
    return curve;
}

}  // namespace

LorenzCurve empirical_lorenz_gini(std::span<const std::uint64_t> values) {
    if (values.empty()) throw DomainError("Lorenz curve of an empty sequence");
    std::vector<std::uint64_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    long double total = 0.0L;
    for (auto x : sorted) total += static_cast<long double>(x);
    if (total == 0.0L) throw DomainError("Lorenz curve of an all-zero sequence");
    return lorenz_from_sorted(sorted, total);
}

std::vector<std::uint64_t> degree_sequence(const Network& net) {
    std::vector<std::uint64_t> out(net.vertex_count());
    for (VertexId v = 0; v < net.vertex_count(); ++v) out[v] = net.degree(v);
    return out;
}

LorenzCurve class_based_lorenz(const DegreeHistogram& hist) {
    // n+1 classes j = k .. k+n; unobserved classes contribute zero share.
    std::vector<std::uint64_t> counts(hist.n + 1, 0);
    std::uint64_t total = 0;
    for (const auto& [d, c] : hist.counts_all) {
        total += c;
        if (d >= static_cast<std::uint64_t>(hist.k) && d - hist.k <= hist.n) counts[d - hist.k] = c;
    }
    if (total == 0) throw DomainError("empty degree histogram");
    std::sort(counts.begin(), counts.end());
    return lorenz_from_sorted(counts, static_cast<long double>(total));
}

namespace {

// Breadth-first search with an epoch-stamped visit array reused across sources.
class BfsScratch {
public:
    explicit BfsScratch(std::size_t vertices) : stamp_(vertices, 0), dist_(vertices, 0), queue_(vertices) {}

    // Returns (sum of distances, eccentricity).
    std::pair<std::uint64_t, std::uint32_t> run(const Network& net, VertexId source) {
        ++epoch_;
        if (epoch_ == 0) {  // wrapped: reset stamps once
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        std::size_t head = 0, tail = 0;
        queue_[tail++] = source;
        stamp_[source] = epoch_;
        dist_[source] = 0;
        std::uint64_t sum = 0;
        std::uint32_t ecc = 0;
        while (head < tail) {
            const VertexId u = queue_[head++];
            const std::uint32_t du = dist_[u];
            sum += du;
            ecc = std::max(ecc, du);
            for (VertexId w : net.neighbors(u)) {
                if (stamp_[w] != epoch_) {
                    stamp_[w] = epoch_;
                    dist_[w] = du + 1;
                    queue_[tail++] = w;
                }
            }
        }
        return {sum, ecc};
    }

private:
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> dist_;
    std::vector<VertexId> queue_;
    std::uint32_t epoch_ = 0;
};

std::pair<std::uint64_t, std::uint32_t> sweep(const Network& net, const std::vector<VertexId>& sources,
                                              unsigned threads) {
    const std::size_t vertices = net.vertex_count();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(sources.size())));
    std::vector<std::uint64_t> sums(threads, 0);
    std::vector<std::uint32_t> eccs(threads, 0);
    const auto work = [&](unsigned w) {
        BfsScratch scratch(vertices);
        for (std::size_t i = w; i < sources.size(); i += threads) {
            const auto [s, e] = scratch.run(net, sources[i]);
            sums[w] += s;
            eccs[w] = std::max(eccs[w], e);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    return {std::accumulate(sums.begin(), sums.end(), std::uint64_t{0}),
            *std::max_element(eccs.begin(), eccs.end())};
}

}  // namespace

DistanceReport distance_metrics(const Network& net, const DistanceMode& mode, const ResourceBudget& budget,
                                unsigned threads) {
    const std::uint64_t vertices = net.vertex_count();
    DistanceReport report;
    if (std::holds_alternative<ExactDistances>(mode)) {
        if (vertices > budget.exact_distance_vertices) {
            throw ResourceError("exact distances on " + std::to_string(vertices) +
                                " vertices exceed the limit of " + std::to_string(budget.exact_distance_vertices) +
                                "; use sampled mode or raise HDRAN_EXACT_DISTANCE_VERTICES");
        }
        std::vector<VertexId> sources(vertices);
        std::iota(sources.begin(), sources.end(), VertexId{0});
        const auto [sum, diameter] = sweep(net, sources, threads);
        report.wiener = sum / 2;
        report.wiener_estimate = static_cast<double>(report.wiener);
        report.diameter = diameter;
        report.source_count = vertices;
        report.exact = true;
        return report;
    }
    const auto& sampled = std::get<SampledDistances>(mode);
    if (sampled.sources == 0) throw DomainError("sampled distance mode needs at least one source");
    const std::uint64_t s = std::min(sampled.sources, vertices);
    // Partial Fisher-Yates: the first s entries are a uniform sample without replacement.
    std::vector<VertexId> ids(vertices);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    Xoshiro256 rng(sampled.seed);
    for (std::uint64_t i = 0; i < s; ++i) {
        const std::uint64_t j = i + rng.bounded(vertices - i);
        std::swap(ids[i], ids[j]);
    }
    ids.resize(s);
    const auto [sum, ecc] = sweep(net, ids, threads);
    report.wiener_estimate = static_cast<double>(vertices) / static_cast<double>(s) * static_cast<double>(sum) / 2.0;
    report.wiener = static_cast<std::uint64_t>(report.wiener_estimate + 0.5);
    report.diameter = ecc;
    report.source_count = s;
    report.exact = s == vertices;
    return report;
}

}  // namespace hdran::metrics
