#ifndef HDRAN_THEORY_HPP
#define HDRAN_THEORY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hdran/special_functions.hpp"

/// Closed forms and recurrences for degree, clustering, Lorenz/Gini, depth
/// and diameter statistics of random Apollonian networks of index k.
///
/// Every function here is a pure function of its arguments and may be called
/// concurrently.
namespace hdran::theory {

// ---------------------------------------------------------------------------
// Degree profile: number of vertices of degree j
// ---------------------------------------------------------------------------

/// b_{j,k} = Gamma(j) Gamma(2k-1) / (Gamma(j+k) Gamma(k-1)), built as the
/// product b_{k,k} = (k-1)/(2k-1), b_{j,k} = b_{j-1,k} (j-1)/(j+k-1).
/// Throws DomainError for j < k or k < 3.
Rational limit_fraction(int j, int k);
/// Same quantity in floating point (telescoping product, no gamma ratios).
double limit_fraction_value(int j, int k);

/// Limit fraction when a degree-j vertex is recruited with weight equal to
/// the number of active cliques containing it, k + (k-2)(j-k). Coincides with
/// limit_fraction for k = 3; for k > 3 it is the exact limit of the
/// simulated process and decays like j^-(2k-3)/(k-2).
double clique_weighted_limit_fraction(int j, int k);

/// Sum_{j=k}^{k+n} b_{j,k} via 1 - Gamma(2k-1)Gamma(k+n+1)/(Gamma(k)Gamma(2k+n)).
Rational partial_sum_fractions(std::uint64_t n, int k);

/// E[X_{n,j}] for j = k .. k+n-1 from the first-moment recurrences seeded
/// with E[X_{1,k}] = 1. Index i of the result holds degree k + i. A
/// max_degree >= k truncates the table (and the work) to degrees <= max_degree.
std::vector<double> expected_degree_profile(std::uint64_t n, int k, std::uint64_t max_degree = 0);
/// Single entry of expected_degree_profile. DomainError when j is outside
/// [k, k+n-1] or n < 1.
double expected_degree_count(std::uint64_t n, int j, int k);
/// Uniform L1 bound 2k^2/(2k-1) between E[X_{n,j}] and b_{j,k} n.
double degree_l1_bound(int k);

// ---------------------------------------------------------------------------
// Degree of the vertex with a fixed label
// ---------------------------------------------------------------------------

/// Largest n - j for which the exact pmf is evaluated.
inline constexpr std::uint64_t kMaxExactPmfSpan = 64;

/// Exact pmf of delta = D_{n,j} - k on {0, ..., n-j}.
///
/// For delta >= 1:
///   P = (n-j)! / <j + 1/(k-1)>_{n-j} * binom(delta + 2/(k-2), delta)
///       * sum_{r=0}^{delta} (-1)^r binom(delta, r) binom(n - 2 - r (k-2)/(k-1), n - j)
/// and the delta = 0 mass is one minus the rest.
/// Throws DomainError for j < 1, j > n, or n - j > kMaxExactPmfSpan.
std::map<std::uint64_t, Rational> label_degree_pmf(std::uint64_t n, std::uint64_t j, int k);

/// The delta-term of the pmf above evaluated directly (also valid at delta = 0).
Rational label_degree_pmf_term(std::uint64_t n, std::uint64_t j, int k, std::uint64_t delta);

/// s-th raw moment of D_{n,j} through the Stirling/Pochhammer expansion.
double label_degree_moment(std::uint64_t n, std::uint64_t j, int k, int s);

enum class MeanRegime { Sublinear, Linear };

struct AsymptoticMean {
    double value = 0.0;
    MeanRegime regime = MeanRegime::Sublinear;
    double alpha = 0.0;  // j / n when regime == Linear
};

/// Leading-order E[D_{n,j}].
///   j <= n / log n : (k/(k-2)) Gamma(j + 1/(k-1)) / Gamma(j+1) * n^{(k-2)/(k-1)}
///   otherwise      : (k/(k-2)) (k - 3 + alpha^{-(k-2)/(k-1)}), alpha = j/n
AsymptoticMean label_degree_asymptotic_mean(std::uint64_t n, std::uint64_t j, int k);

// ---------------------------------------------------------------------------
// Clustering
// ---------------------------------------------------------------------------

/// Local clustering coefficient (k-1)(2j-k)/(j(j-1)) of a newcomer of degree j.
double newcomer_clustering(std::uint64_t j, int k);

/// ((k-1)/(2k-1)) (2(2k-1)/k - 3F2(1, k-1, k; 2k, k+1; 1)).
double clustering_limit(int k);
/// Direct series sum_{j>=k} newcomer_clustering(j, k) b_{j,k}.
double clustering_limit_series(int k);
/// The same series weighted by clique_weighted_limit_fraction.
double clique_weighted_clustering_limit(int k);

// ---------------------------------------------------------------------------
// Lorenz curve and Gini index over degree classes
// ---------------------------------------------------------------------------

struct LorenzPoint {
    double position = 0.0;
    double cumulative = 0.0;
};

/// n+2 points: position i/(n+1), cumulative sum of the i smallest b_{j,k}
/// for j in {k, ..., k+n}.
std::vector<LorenzPoint> theoretical_lorenz(std::uint64_t n, int k);
/// Cumulative values of theoretical_lorenz in exact arithmetic, from
/// G(n-i) - G(n) with G(m) = Gamma(2k-1)Gamma(k+m+1)/(Gamma(k)Gamma(2k+m)).
std::vector<Rational> theoretical_lorenz_exact(std::uint64_t n, int k);

/// Gini = 1 - 2 * (trapezoid area under theoretical_lorenz), in closed form:
///   1 - (1/(n+1)) ((3k-2)/(k-2) - G(n) (2(k-1)n + 5k - 4)/(k-2)).
double theoretical_gini(std::uint64_t n, int k);
/// The frequently quoted variant with ((k-1)n + 2) 2^{2k-1} Gamma(k-1/2) /
/// Gamma(1/2) in place of the exact correction term. Agrees with
/// theoretical_gini to leading order only; kept for side-by-side reports.
double theoretical_gini_quoted(std::uint64_t n, int k);
/// Gini by summing trapezoids over theoretical_lorenz.
double theoretical_gini_trapezoid(std::uint64_t n, int k);

// ---------------------------------------------------------------------------
// Total depth of active cliques
// ---------------------------------------------------------------------------

/// E[ext] = (kn - n + 1) sum_{i=0}^{n-1} k / (k + (k-1) i).
double expected_total_depth(std::uint64_t n, int k);
/// Same via digamma: (kn-n+1) k/(k-1) [psi(n + k/(k-1)) - psi(k/(k-1))].
double expected_total_depth_digamma(std::uint64_t n, int k);

/// E[ext^2] from E[ext_n^2] = (1 + 2(k-1)/L) E[ext_{n-1}^2] + C(k, n) with
/// L = (k-1)(n-1) + 1 and E[ext_1^2] = k^2. The inhomogeneous term is
///   C(k, n) = (k-1)^2 E[Q_{n-1}]/L + k^2 + (2k + 2k(k-1)/L) E[ext_{n-1}],
/// where Q is the sum of squared depths, itself following
///   E[Q_n] = (1 + (k-1)/L) E[Q_{n-1}] + 2k E[ext_{n-1}]/L + k.
double total_depth_second_moment(std::uint64_t n, int k);

struct ExactDepthMoments {
    Rational mean;
    Rational second_moment;
    Rational squared_depth_sum;  // E[Q_n]
};
/// The same recurrences in exact arithmetic (intended for small n).
ExactDepthMoments exact_total_depth_moments(std::uint64_t n, int k);

/// Leading term ((k-1)n + k)((k-1)n + 1) k E(k, n) of the published
/// second-moment expansion, with the unspecified symbol m read as k.
/// Comparison only; it carries an O(n^2 log n) error by construction.
double total_depth_second_moment_expansion(std::uint64_t n, int k);

// ---------------------------------------------------------------------------
// Diameter constants
// ---------------------------------------------------------------------------

struct DiameterConstants {
    /// Root > 1 of eta - 1 - log(eta) = log(k).
    double eta_star = 0.0;
    /// Diameter upper-bound constant 2 eta* / (k-1): diameter <= this * log n.
    double upper_bound_constant = 0.0;
    /// Root of Gamma(k+1) Gamma((k-1)a) / Gamma((k-1)a + k)
    ///           * exp(sum_{l<k} ((k-1)(a+1) - 1)/(l + (k-1)a)) = 1.
    double a = 0.0;
    /// Height constant h, 1/h = sum_{l<k} (k-1)/(l + a(k-1)); h ~ 1/(k log 2).
    double height_constant = 0.0;
    /// Diameter constant c = 2h; c(3) ~ 1.668.
    double c = 0.0;
    double eta_residual = 0.0;  // |eta - 1 - log eta - log k|
    double a_residual = 0.0;    // |lhs - 1| of the a-equation
};

/// Throws NumericError when a bracket cannot be established or the
/// iteration cap (200) is reached above tolerance 1e-10.
DiameterConstants diameter_constants(int k);

/// log of the a-equation left-hand side; zero at the root.
double diameter_a_equation_log(double a, int k);

// ---------------------------------------------------------------------------
// Aggregate report
// ---------------------------------------------------------------------------

struct TheoryReport {
    int k = 0;
    std::uint64_t n = 0;
    /// j -> (exact, float) for j = k .. j_max
    std::map<int, std::pair<Rational, double>> b_fractions;
    /// j -> E[X_{n,j}]
    std::map<int, double> expected_counts;
    double clustering_limit = 0.0;
    double gini_closed_form = 0.0;
    double gini_quoted = 0.0;
    std::vector<LorenzPoint> lorenz_points;
    double depth_mean = 0.0;
    double depth_second_moment = 0.0;
    DiameterConstants diameter;
};

/// Evaluates everything for (k, n). Degree tables run over j = k .. j_max.
TheoryReport make_theory_report(int k, std::uint64_t n, int j_max);

}  // namespace hdran::theory

#endif  // HDRAN_THEORY_HPP
