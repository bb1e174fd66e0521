#include "hdran/theory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "hdran/error.hpp"

namespace hdran::theory {

namespace {

void require_index(int k) {
    if (k < 3) throw DomainError("index k must be >= 3 (got " + std::to_string(k) + ")");
}

// G(m) = Gamma(2k-1) Gamma(k+m+1) / (Gamma(k) Gamma(2k+m)) = prod_{t<k-1} (k+t)/(k+m+1+t).
// G(-1) = 1.
double g_tail(std::int64_t m, int k) {
    double g = 1.0;
    for (int t = 0; t < k - 1; ++t) {
        g *= static_cast<double>(k + t) / (static_cast<double>(k + t + 1) + static_cast<double>(m));
    }
    return g;
}

Rational g_tail_exact(std::int64_t m, int k) {
    Rational g = 1;
    for (int t = 0; t < k - 1; ++t) {
        g *= Rational(k + t, static_cast<long long>(k + t + 1 + m));
    }
    return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Degree profile
// ---------------------------------------------------------------------------

Rational limit_fraction(int j, int k) {
    require_index(k);
    if (j < k) throw DomainError("limit_fraction requires j >= k");
    Rational b(k - 1, 2 * k - 1);
    for (int i = k + 1; i <= j; ++i) b *= Rational(i - 1, i + k - 1);
    return b;
}

double limit_fraction_value(int j, int k) {
    require_index(k);
    if (j < k) throw DomainError("limit_fraction requires j >= k");
    double b = static_cast<double>(k - 1) / (2.0 * k - 1.0);
    for (int i = k + 1; i <= j; ++i) b *= static_cast<double>(i - 1) / static_cast<double>(i + k - 1);
    return b;
}

double clique_weighted_limit_fraction(int j, int k) {
    require_index(k);
    if (j < k) throw DomainError("clique_weighted_limit_fraction requires j >= k");
    // Balance of b_j against the (k-1) new slots per step:
    // b_j (k - 1 + w_j) = b_{j-1} w_{j-1}, with b_k (k - 1 + w_k) = k - 1.
    const auto weight = [k](int d) { return static_cast<double>(k + (k - 2) * (d - k)); };
    double b = (k - 1.0) / (k - 1.0 + weight(k));
    for (int d = k + 1; d <= j; ++d) b *= weight(d - 1) / (k - 1.0 + weight(d));
    return b;
}

Rational partial_sum_fractions(std::uint64_t n, int k) {
    require_index(k);
    return 1 - g_tail_exact(static_cast<std::int64_t>(n), k);
}

std::vector<double> expected_degree_profile(std::uint64_t n, int k, std::uint64_t max_degree) {
    require_index(k);
    if (n < 1) throw DomainError("expected_degree_profile requires n >= 1");
    // x[i] = E[X_{t, k+i}]; degrees above k+t-1 are unreachable at time t.
    // Entry i depends only on entries <= i, so the table can be cut at max_degree.
    std::uint64_t width = n;
    if (max_degree >= static_cast<std::uint64_t>(k)) width = std::min(n, max_degree - k + 1);
    std::vector<double> x(width, 0.0);
    x[0] = 1.0;
    for (std::uint64_t t = 1; t < n; ++t) {
        const double denom = static_cast<double>(k - 1) * static_cast<double>(t) + 1.0;
        for (std::uint64_t i = std::min(t, width - 1); i >= 1; --i) {
            const double j = static_cast<double>(k) + static_cast<double>(i);
            x[i] = x[i] * (1.0 - j / denom) + x[i - 1] * (j - 1.0) / denom;
        }
        x[0] = x[0] * (1.0 - k / denom) + 1.0;
    }
    return x;
}

double expected_degree_count(std::uint64_t n, int j, int k) {
    require_index(k);
    if (n < 1) throw DomainError("expected_degree_count requires n >= 1");
    if (j < k || static_cast<std::uint64_t>(j - k) >= n) {
        throw DomainError("expected_degree_count requires k <= j <= k + n - 1");
    }
    return expected_degree_profile(n, k, static_cast<std::uint64_t>(j))[static_cast<std::size_t>(j - k)];
}

double degree_l1_bound(int k) {
    require_index(k);
    return 2.0 * k * k / (2.0 * k - 1.0);
}

// ---------------------------------------------------------------------------
// Degree of a labeled vertex
// ---------------------------------------------------------------------------

namespace {

void require_label(std::uint64_t n, std::uint64_t j, int k) {
    require_index(k);
    if (j < 1 || j > n) throw DomainError("label j must satisfy 1 <= j <= n");
}

}  // namespace

Rational label_degree_pmf_term(std::uint64_t n, std::uint64_t j, int k, std::uint64_t delta) {
    require_label(n, j, k);
    const std::uint64_t m = n - j;
    if (m > kMaxExactPmfSpan) {
        throw DomainError("exact pmf limited to n - j <= " + std::to_string(kMaxExactPmfSpan));
    }
    if (delta > m) return Rational(0);
    const Rational inv_k1(1, k - 1);
    const Rational rho(k - 2, k - 1);
    Rational m_factorial = 1;
    for (std::uint64_t i = 2; i <= m; ++i) m_factorial *= static_cast<long long>(i);
    const Rational lead = m_factorial / pochhammer(Rational(static_cast<long long>(j)) + inv_k1, m) *
                          generalized_binomial(Rational(static_cast<long long>(delta)) + Rational(2, k - 2), delta);
    Rational alternating = 0;
    BigInt choose = 1;  // binom(delta, r)
    for (std::uint64_t r = 0; r <= delta; ++r) {
        const Rational top = Rational(static_cast<long long>(n) - 2) - rho * static_cast<long long>(r);
        Rational term = Rational(choose) * generalized_binomial(top, m);
        if (r % 2 == 1) term = -term;
        alternating += term;
        choose = choose * (delta - r) / (r + 1);
    }
    return lead * alternating;
}

std::map<std::uint64_t, Rational> label_degree_pmf(std::uint64_t n, std::uint64_t j, int k) {
    require_label(n, j, k);
    const std::uint64_t m = n - j;
    if (m > kMaxExactPmfSpan) {
        throw DomainError("exact pmf limited to n - j <= " + std::to_string(kMaxExactPmfSpan) +
                          "; use label_degree_moment for larger spans");
    }
    std::map<std::uint64_t, Rational> pmf;
    Rational rest = 0;
    for (std::uint64_t delta = 1; delta <= m; ++delta) {
        pmf[delta] = label_degree_pmf_term(n, j, k, delta);
        rest += pmf[delta];
    }
    pmf[0] = 1 - rest;
    return pmf;
}

namespace {

Rational pow_rational(const Rational& x, int e) {
    Rational result = 1;
    for (int i = 0; i < e; ++i) result *= x;
    return result;
}

// Exact evaluation of the moment formula; used while n - j is small.
double label_degree_moment_exact(std::uint64_t n, std::uint64_t j, int k, int s) {
    const std::uint64_t m = n - j;
    const Rational kk3(k * (k - 3));
    const Rational km2(k - 2);
    const Rational base = Rational(static_cast<long long>(j)) + Rational(1, k - 1);
    const Rational denom = pochhammer(base, m);
    Rational total = pow_rational(kk3, s);
    BigInt s_choose_r = 1;
    for (int r = 1; r <= s; ++r) {
        s_choose_r = s_choose_r * (s - r + 1) / r;
        Rational inner = 0;
        for (int i = 1; i <= r; ++i) {
            Rational term = Rational(stirling2(r, i)) * pochhammer(Rational(k, k - 2), static_cast<std::size_t>(i)) *
                            pochhammer(base + Rational(static_cast<long long>(k - 2) * i, k - 1), m);
            if ((r - i) % 2 == 1) term = -term;
            inner += term;
        }
        total += Rational(s_choose_r) * pow_rational(kk3, s - r) * pow_rational(km2, r) / denom * inner;
    }
    return to_double(total / pow_rational(km2, s));
}

}  // namespace

double label_degree_moment(std::uint64_t n, std::uint64_t j, int k, int s) {
    require_label(n, j, k);
    if (s < 1) throw DomainError("moment order s must be >= 1");
    const std::uint64_t m = n - j;
    if (m <= 256) return label_degree_moment_exact(n, j, k, s);

    // Large spans: Pochhammer ratios through log-gamma differences.
    const long double kk3 = static_cast<long double>(k) * (k - 3);
    const long double km2 = k - 2;
    const long double base = static_cast<long double>(j) + 1.0L / (k - 1);
    const long double md = static_cast<long double>(m);
    long double total = std::pow(kk3, s);
    long double s_choose_r = 1;
    for (int r = 1; r <= s; ++r) {
        s_choose_r = s_choose_r * (s - r + 1) / r;
        long double inner = 0;
        for (int i = 1; i <= r; ++i) {
            const long double shifted = base + static_cast<long double>(k - 2) * i / (k - 1);
            const long double log_ratio = (std::lgamma(shifted + md) - std::lgamma(shifted)) -
                                          (std::lgamma(base + md) - std::lgamma(base));
            const long double rising_k = std::exp(std::lgamma(static_cast<long double>(k) / (k - 2) + i) -
                                                  std::lgamma(static_cast<long double>(k) / (k - 2)));
            long double term = to_double(Rational(stirling2(r, i))) * rising_k * std::exp(log_ratio);
            if ((r - i) % 2 == 1) term = -term;
            inner += term;
        }
        total += s_choose_r * std::pow(kk3, s - r) * std::pow(km2, r) * inner;
    }
    return static_cast<double>(total / std::pow(km2, s));
}

AsymptoticMean label_degree_asymptotic_mean(std::uint64_t n, std::uint64_t j, int k) {
    require_label(n, j, k);
    const double nd = static_cast<double>(n);
    const double jd = static_cast<double>(j);
    const double rho = static_cast<double>(k - 2) / (k - 1);
    const double scale = static_cast<double>(k) / (k - 2);
    AsymptoticMean out;
    const bool sublinear = n > 1 && jd <= nd / std::log(nd);
    if (sublinear) {
        out.regime = MeanRegime::Sublinear;
        out.value = scale * std::exp(std::lgamma(jd + 1.0 / (k - 1)) - std::lgamma(jd + 1.0) + rho * std::log(nd));
    } else {
        out.regime = MeanRegime::Linear;
        out.alpha = jd / nd;
        out.value = scale * (k - 3 + std::pow(out.alpha, -rho));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Clustering
// ---------------------------------------------------------------------------

double newcomer_clustering(std::uint64_t j, int k) {
    require_index(k);
    if (j < static_cast<std::uint64_t>(k)) throw DomainError("degree must be >= k");
    const double jd = static_cast<double>(j);
    return (k - 1.0) * (2.0 * jd - k) / (jd * (jd - 1.0));
}

double clustering_limit(int k) {
    require_index(k);
    const double f = hyp3f2_unit(Rational(1), Rational(k - 1), Rational(k), Rational(2 * k), Rational(k + 1));
    return (k - 1.0) / (2.0 * k - 1.0) * (2.0 * (2.0 * k - 1.0) / k - f);
}

double clustering_limit_series(int k) {
    require_index(k);
    constexpr int kTerms = 400'000;
    long double b = static_cast<long double>(k - 1) / (2 * k - 1);
    long double sum = 0.0L;
    int j = k;
    for (; j < k + kTerms; ++j) {
        if (j > k) b *= static_cast<long double>(j - 1) / (j + k - 1);
        sum += static_cast<long double>(newcomer_clustering(static_cast<std::uint64_t>(j), k)) * b;
    }
    // Remaining terms behave like 2(k-1) b_J J^{k} j^{-(k+1)}; integrate from J.
    sum += 2.0L * (k - 1) * b / k;
    return static_cast<double>(sum);
}

double clique_weighted_clustering_limit(int k) {
    require_index(k);
    constexpr int kTerms = 2'000'000;
    const auto weight = [k](long double d) { return k + (k - 2) * (d - k); };
    long double b = (k - 1.0L) / (k - 1.0L + weight(k));
    long double sum = 0.0L;
    int j = k;
    for (; j < k + kTerms; ++j) {
        if (j > k) b *= weight(j - 1) / (k - 1.0L + weight(j));
        sum += static_cast<long double>(newcomer_clustering(static_cast<std::uint64_t>(j), k)) * b;
    }
    // b_j ~ C j^{-p} with p = (2k-3)/(k-2) and C_j ~ 2(k-1)/j.
    const long double p = (2.0L * k - 3) / (k - 2);
    sum += 2.0L * (k - 1) * b / p;
    return static_cast<double>(sum);
}

// ---------------------------------------------------------------------------
// Lorenz / Gini
// ---------------------------------------------------------------------------

std::vector<LorenzPoint> theoretical_lorenz(std::uint64_t n, int k) {
    require_index(k);
    if (n < 1) throw DomainError("theoretical_lorenz requires n >= 1");
    // b_{k..k+n} by the product recurrence, then accumulate from the smallest (largest j).
    std::vector<double> b(n + 1);
    b[0] = static_cast<double>(k - 1) / (2.0 * k - 1.0);
    for (std::uint64_t i = 1; i <= n; ++i) {
        const double j = static_cast<double>(k) + static_cast<double>(i);
        b[i] = b[i - 1] * (j - 1.0) / (j + k - 1.0);
    }
    std::vector<LorenzPoint> points(n + 2);
    const double step = 1.0 / static_cast<double>(n + 1);
    long double acc = 0.0L;
    points[0] = {0.0, 0.0};
    for (std::uint64_t i = 1; i <= n + 1; ++i) {
        acc += b[n + 1 - i];
        points[i] = {static_cast<double>(i) * step, static_cast<double>(acc)};
    }
    points[n + 1].position = 1.0;
    return points;
}

std::vector<Rational> theoretical_lorenz_exact(std::uint64_t n, int k) {
    require_index(k);
    if (n < 1) throw DomainError("theoretical_lorenz requires n >= 1");
    const auto nn = static_cast<std::int64_t>(n);
    const Rational g_n = g_tail_exact(nn, k);
    std::vector<Rational> out;
    out.reserve(n + 2);
    for (std::int64_t i = 0; i <= nn + 1; ++i) out.push_back(g_tail_exact(nn - i, k) - g_n);
    return out;
}

double theoretical_gini(std::uint64_t n, int k) {
    require_index(k);
    if (n < 1) throw DomainError("theoretical_gini requires n >= 1");
    const double nd = static_cast<double>(n);
    const double g = g_tail(static_cast<std::int64_t>(n), k);
    const double inner = (3.0 * k - 2.0) / (k - 2.0) - g * (2.0 * (k - 1.0) * nd + 5.0 * k - 4.0) / (k - 2.0);
    return 1.0 - inner / (nd + 1.0);
}

double theoretical_gini_quoted(std::uint64_t n, int k) {
    require_index(k);
    if (n < 1) throw DomainError("theoretical_gini requires n >= 1");
    const double nd = static_cast<double>(n);
    // 2^{2k-1} Gamma(k-1/2) / Gamma(1/2) = 2 Gamma(2k-1) / Gamma(k) by duplication.
    const double log_coeff = (2.0 * k - 1.0) * std::log(2.0) + std::lgamma(k - 0.5) - std::lgamma(0.5);
    const double log_ratio = std::lgamma(k + nd + 1.0) - std::lgamma(2.0 * k + nd);
    const double correction = ((k - 1.0) * nd + 2.0) * std::exp(log_coeff + log_ratio) / (k - 2.0);
    return 1.0 - ((3.0 * k - 2.0) / (k - 2.0) - correction) / (nd + 1.0);
}

double theoretical_gini_trapezoid(std::uint64_t n, int k) {
    const auto points = theoretical_lorenz(n, k);
    long double area = 0.0L;
    for (std::size_t i = 1; i < points.size(); ++i) {
        area += 0.5L * (points[i].position - points[i - 1].position) *
                (static_cast<long double>(points[i].cumulative) + points[i - 1].cumulative);
    }
    return static_cast<double>(1.0L - 2.0L * area);
}

// ---------------------------------------------------------------------------
// Depth
// ---------------------------------------------------------------------------

double expected_total_depth(std::uint64_t n, int k) {
    require_index(k);
    long double sum = 0.0L;
    for (std::uint64_t i = 0; i < n; ++i) {
        sum += static_cast<long double>(k) / (k + static_cast<long double>(k - 1) * i);
    }
    const long double active = static_cast<long double>(k - 1) * n + 1;
    return static_cast<double>(active * sum);
}

double expected_total_depth_digamma(std::uint64_t n, int k) {
    require_index(k);
    if (n == 0) return 0.0;
    const double r = static_cast<double>(k) / (k - 1);
    const double active = static_cast<double>(k - 1) * static_cast<double>(n) + 1.0;
    return active * r * (digamma(static_cast<double>(n) + r) - digamma(r));
}

double total_depth_second_moment(std::uint64_t n, int k) {
    require_index(k);
    const long double kk = k;
    long double ext = 0.0L, ext2 = 0.0L, q = 0.0L;
    for (std::uint64_t t = 1; t <= n; ++t) {
        const long double l = (kk - 1) * static_cast<long double>(t - 1) + 1;
        const long double ext2_next = (1 + 2 * (kk - 1) / l) * ext2 + (kk - 1) * (kk - 1) * q / l + kk * kk +
                                      (2 * kk + 2 * kk * (kk - 1) / l) * ext;
        const long double q_next = (1 + (kk - 1) / l) * q + 2 * kk * ext / l + kk;
        ext = (1 + (kk - 1) / l) * ext + kk;
        ext2 = ext2_next;
        q = q_next;
    }
    return static_cast<double>(ext2);
}

ExactDepthMoments exact_total_depth_moments(std::uint64_t n, int k) {
    require_index(k);
    const Rational kk(k);
    Rational ext = 0, ext2 = 0, q = 0;
    for (std::uint64_t t = 1; t <= n; ++t) {
        const Rational l = (kk - 1) * static_cast<long long>(t - 1) + 1;
        const Rational ext2_next = (1 + 2 * (kk - 1) / l) * ext2 + (kk - 1) * (kk - 1) * q / l + kk * kk +
                                   (2 * kk + 2 * kk * (kk - 1) / l) * ext;
        const Rational q_next = (1 + (kk - 1) / l) * q + 2 * kk * ext / l + kk;
        ext = (1 + (kk - 1) / l) * ext + kk;
        ext2 = ext2_next;
        q = q_next;
    }
    return ExactDepthMoments{ext, ext2, q};
}

double total_depth_second_moment_expansion(std::uint64_t n, int k) {
    require_index(k);
    const double kd = k;
    const double km1 = kd - 1.0;
    const auto psi_arg = [&](double i) { return (km1 * i + 2.0 * kd - 1.0) / km1; };
    // Inner sum over j does not depend on i.
    double inner = 0.0;
    for (std::uint64_t j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        inner += digamma(psi_arg(jd)) / (km1 * jd + kd);
    }
    const double psi_r = digamma(kd / km1);
    double e = 0.0;
    for (std::uint64_t i = 1; i < n; ++i) {
        const double id = static_cast<double>(i);
        const double braces = (2.0 * kd * kd - 2.0 * kd) * inner - (2.0 * psi_r - kd + 1.0) * digamma(psi_arg(id)) +
                              2.0 * kd * (id * digamma((km1 * id + kd) / km1) + trigamma(psi_arg(id)));
        e += braces / ((km1 * id + 2.0 * kd - 1.0) * (km1 * id + kd));
    }
    const double nd = static_cast<double>(n);
    return (km1 * nd + kd) * (km1 * nd + 1.0) * kd * e;
}

// ---------------------------------------------------------------------------
// Diameter constants
// ---------------------------------------------------------------------------

double diameter_a_equation_log(double a, int k) {
    require_index(k);
    if (!(a > 0.0)) throw DomainError("a must be positive");
    const double km1 = k - 1.0;
    double log_lhs = std::lgamma(k + 1.0) + std::lgamma(km1 * a) - std::lgamma(km1 * a + k);
    for (int l = 0; l < k; ++l) log_lhs += (km1 * (a + 1.0) - 1.0) / (l + km1 * a);
    return log_lhs;
}

namespace {

constexpr int kMaxIterations = 200;
constexpr double kResidualTolerance = 1e-10;

// Bisection with secant proposals kept inside the bracket. f(lo) > 0 > f(hi).
double solve_decreasing(const std::function<double(double)>& f, double lo, double hi, const char* what) {
    double flo = f(lo), fhi = f(hi);
    if (!(flo > 0.0 && fhi < 0.0)) throw NumericError(std::string("no sign change bracketing ") + what);
    for (int it = 0; it < kMaxIterations; ++it) {
        double x = lo - flo * (hi - lo) / (fhi - flo);
        const double mid = 0.5 * (lo + hi);
        if (!(x > lo && x < hi) || it % 2 == 1) x = mid;  // alternate to guarantee halving
        const double fx = f(x);
        if (std::fabs(fx) <= 0.01 * kResidualTolerance || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi) {
            return x;
        }
        if (fx > 0.0) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    const double x = 0.5 * (lo + hi);
    if (std::fabs(f(x)) <= kResidualTolerance) return x;
    throw NumericError(std::string("root finding for ") + what + " did not converge");
}

}  // namespace

DiameterConstants diameter_constants(int k) {
    require_index(k);
    DiameterConstants out;
    const double log_k = std::log(static_cast<double>(k));

    const auto eta_eq = [log_k](double eta) { return log_k - (eta - 1.0 - std::log(eta)); };
    out.eta_star = solve_decreasing(eta_eq, 1.0 + 1e-6, 64.0, "eta*");
    out.eta_residual = std::fabs(eta_eq(out.eta_star));
    out.upper_bound_constant = 2.0 * out.eta_star / (k - 1.0);

    const auto a_eq = [k](double a) { return diameter_a_equation_log(a, k); };
    // Scan a geometric grid for the first sign change.
    double lo = 0.0, hi = 0.0;
    double prev = 1e-6;
    bool found = false;
    for (double x = prev * 1.25; x < 1e8; x *= 1.25) {
        if (a_eq(prev) > 0.0 && a_eq(x) < 0.0) {
            lo = prev;
            hi = x;
            found = true;
            break;
        }
        prev = x;
    }
    if (!found) throw NumericError("could not bracket the diameter a-equation for k = " + std::to_string(k));
    out.a = solve_decreasing(a_eq, lo, hi, "a");
    out.a_residual = std::fabs(std::expm1(a_eq(out.a)));
    if (out.a_residual > kResidualTolerance || out.eta_residual > kResidualTolerance) {
        throw NumericError("diameter constants residual above tolerance");
    }
    double inv = 0.0;
    for (int l = 0; l < k; ++l) inv += (k - 1.0) / (l + out.a * (k - 1.0));
    out.height_constant = 1.0 / inv;
    out.c = 2.0 * out.height_constant;
    return out;
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

TheoryReport make_theory_report(int k, std::uint64_t n, int j_max) {
    require_index(k);
    if (n < 1) throw DomainError("theory report requires n >= 1");
    TheoryReport report;
    report.k = k;
    report.n = n;
    const auto profile = expected_degree_profile(n, k, static_cast<std::uint64_t>(std::max(j_max, k)));
    for (int j = k; j <= j_max; ++j) {
        report.b_fractions.emplace(j, std::make_pair(limit_fraction(j, k), limit_fraction_value(j, k)));
        if (static_cast<std::uint64_t>(j - k) < profile.size()) {
            report.expected_counts[j] = profile[static_cast<std::size_t>(j - k)];
        }
    }
    report.clustering_limit = clustering_limit(k);
    report.gini_closed_form = theoretical_gini(n, k);
    report.gini_quoted = theoretical_gini_quoted(n, k);
    report.lorenz_points = theoretical_lorenz(n, k);
    report.depth_mean = expected_total_depth(n, k);
    report.depth_second_moment = total_depth_second_moment(n, k);
    report.diameter = diameter_constants(k);
    return report;
}

}  // namespace hdran::theory
