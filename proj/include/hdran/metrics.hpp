#ifndef HDRAN_METRICS_HPP
#define HDRAN_METRICS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "hdran/budget.hpp"
#include "hdran/network.hpp"

/// Empirical measurements on a finished network. All functions are
/// read-only and may run concurrently on the same network.
namespace hdran::metrics {

struct DegreeHistogram {
    std::map<std::uint64_t, std::uint64_t> counts_all;
    /// Vertices with a label (ids >= k).
    std::map<std::uint64_t, std::uint64_t> counts_newcomers;
    std::uint64_t n = 0;
    int k = 0;
};

DegreeHistogram degree_histogram(const Network& net);

/// Degree of the vertex inserted at step j. DomainError unless 1 <= j <= n.
std::uint64_t label_degree(const Network& net, std::uint64_t j);

struct ClusteringProfile {
    /// Mean local coefficient of the vertices of each degree.
    std::map<std::uint64_t, double> by_degree;
    /// (1/(n+k)) sum_v C_v over every vertex, initial ones included.
    double average = 0.0;
    /// Same average restricted to newcomers.
    double newcomer_average = 0.0;
};

/// Local clustering by counting edges inside each neighborhood. Every
/// newcomer's count is checked against (k-1)(deg-k) + k(k-1)/2; a mismatch
/// means a corrupted network and raises std::logic_error.
ClusteringProfile clustering_profile(const Network& net);

/// Number of edges among the neighbors of v.
std::uint64_t neighborhood_edges(const Network& net, VertexId v);

struct LorenzCurve {
    /// (population share, cumulative share), starting at (0, 0).
    std::vector<std::pair<double, double>> points;
    double gini = 0.0;
};

/// Vertex-level Lorenz curve: values sorted ascending, cumulative share of
/// the total against the share of entries; Gini = 1 - 2 * trapezoid area.
/// DomainError for empty or all-zero input.
LorenzCurve empirical_lorenz_gini(std::span<const std::uint64_t> values);

/// Degree sequence in vertex-id order.
std::vector<std::uint64_t> degree_sequence(const Network& net);

/// Lorenz/Gini over degree classes j = k .. k+n: the class shares
/// X_{n,j} / (n+k), ascending, on an equispaced grid of n+1 classes. This is
/// the empirical counterpart of the class-based theoretical curve.
LorenzCurve class_based_lorenz(const DegreeHistogram& hist);

struct ExactDistances {};
struct SampledDistances {
    std::uint64_t sources = 0;
    std::uint64_t seed = 0;
};
using DistanceMode = std::variant<ExactDistances, SampledDistances>;

struct DistanceReport {
    /// Exact Wiener index (exact mode) or the rounded estimate (sampled mode).
    std::uint64_t wiener = 0;
    /// (N / s) * (sum of distances from the sampled sources) / 2 in sampled
    /// mode; equals wiener in exact mode.
    double wiener_estimate = 0.0;
    /// Exact diameter, or the largest eccentricity seen (a lower bound).
    std::uint32_t diameter = 0;
    std::uint64_t source_count = 0;
    bool exact = true;
};

/// Breadth-first search from every vertex (exact) or from a seeded uniform
/// sample of distinct sources without replacement (sampled). Exact mode
/// is refused with ResourceError above budget.exact_distance_vertices.
/// Sources are split across `threads` workers; results do not depend on it.
DistanceReport distance_metrics(const Network& net, const DistanceMode& mode,
                                const ResourceBudget& budget = ResourceBudget{}, unsigned threads = 1);

}  // namespace hdran::metrics

#endif  // HDRAN_METRICS_HPP
