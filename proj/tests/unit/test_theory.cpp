#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hdran/error.hpp"
#include "hdran/theory.hpp"
#include "oracles.hpp"

using namespace hdran;
using namespace hdran::theory;

namespace {

Rational gamma_ratio_b(int j, int k) {
    // Gamma(j) Gamma(2k-1) / (Gamma(j+k) Gamma(k-1)) with integer factorials.
    auto fact = [](int m) {
        BigInt f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    };
    return Rational(fact(j - 1) * fact(2 * k - 2), fact(j + k - 1) * fact(k - 2));
}

long double table2(int k) {
    static const long double a[] = {12.0L, 120.0L, 2800.0L / 3, 6300.0L, 38808.0L, 224224.0L, 1235520.0L, 6563700.0L};
    static const long double b[] = {353.0L / 3,          2367.0L / 2,          138161.0L / 15,
                                    746131.0L / 12,      134056533.0L / 350,   663900367.0L / 300,
                                    26887974331.0L / 2205, 253941996039.0L / 3920};
    const long double pi2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double>;
    return a[k - 3] * pi2 - b[k - 3];
}

}  // namespace

TEST(LimitFraction, SmallValues) {
    EXPECT_EQ(limit_fraction(3, 3), Rational(2, 5));
    EXPECT_EQ(limit_fraction(4, 3), Rational(1, 5));
    EXPECT_EQ(limit_fraction(5, 3), Rational(4, 35));
    EXPECT_THROW(limit_fraction(2, 3), DomainError);
    EXPECT_THROW(limit_fraction(3, 2), DomainError);
}

TEST(LimitFraction, EqualsGammaClosedForm) {
    for (int k = 3; k <= 8; ++k) {
        for (int j = k; j <= k + 30; ++j) EXPECT_EQ(limit_fraction(j, k), gamma_ratio_b(j, k));
    }
}

TEST(LimitFraction, StrictlyDecreasingAndFloatAgrees) {
    for (int k = 3; k <= 8; ++k) {
        for (int j = k; j < k + 100; ++j) {
            EXPECT_GT(limit_fraction(j, k), limit_fraction(j + 1, k));
            EXPECT_NEAR(limit_fraction_value(j, k), to_double(limit_fraction(j, k)), 1e-15);
        }
    }
}

TEST(LimitFraction, StirlingRegime) {
    for (int k = 3; k <= 6; ++k) {
        const double limit = std::tgamma(2.0 * k - 1) / std::tgamma(k - 1.0);
        const double scaled = limit_fraction_value(1000, k) * std::pow(1000.0, k);
        EXPECT_NEAR(scaled / limit, 1.0, 0.02) << "k=" << k;
    }
}

TEST(PartialSum, ClosedFormEqualsTermSum) {
    EXPECT_EQ(partial_sum_fractions(0, 3), Rational(2, 5));
    for (int k = 3; k <= 8; ++k) {
        Rational sum = 0;
        for (std::uint64_t n = 0; n <= 50; ++n) {
            sum += limit_fraction(k + static_cast<int>(n), k);
            EXPECT_EQ(partial_sum_fractions(n, k), sum);
        }
    }
    EXPECT_NEAR(to_double(partial_sum_fractions(5000, 3)), 1.0, 1e-6);
}

TEST(ExpectedDegree, SeededWithOneAtTimeOne) {
    EXPECT_DOUBLE_EQ(expected_degree_count(1, 3, 3), 1.0);
    EXPECT_THROW(expected_degree_count(0, 3, 3), DomainError);
    EXPECT_THROW(expected_degree_count(5, 9, 3), DomainError);
}

TEST(ExpectedDegree, MatchesEnumeratedNewcomerHistogram) {
    // For k = 3 every row is exact; for k > 3 only the j = k row, since a
    // degree-j vertex lies in k + (k-2)(j-k) active cliques rather than j.
    for (int k = 3; k <= 4; ++k) {
        for (int n = 1; n <= 4; ++n) {
            const auto truth = oracle::expected_newcomer_histogram(k, n);
            const auto profile = expected_degree_profile(static_cast<std::uint64_t>(n), k);
            for (std::size_t i = 0; i < profile.size(); ++i) {
                if (k > 3 && i > 0) continue;
                const auto it = truth.find(k + static_cast<int>(i));
                const double want = it == truth.end() ? 0.0 : to_double(it->second);
                EXPECT_NEAR(profile[i], want, 1e-12) << "k=" << k << " n=" << n << " j=" << k + static_cast<int>(i);
            }
        }
    }
}

TEST(ExpectedDegree, RecurrenceDepartsFromProcessAboveThree) {
    const auto truth = oracle::expected_newcomer_histogram(4, 3);
    const auto profile = expected_degree_profile(3, 4);
    EXPECT_GT(std::fabs(profile[1] - to_double(truth.at(5))), 0.1);
}

TEST(ExpectedDegree, WithinUniformBoundOfLinearLaw) {
    for (int k = 3; k <= 6; ++k) {
        for (std::uint64_t n : {10ULL, 100ULL, 2000ULL}) {
            const auto profile = expected_degree_profile(n, k, static_cast<std::uint64_t>(k) + 40);
            for (std::size_t i = 0; i < profile.size(); ++i) {
                const int j = k + static_cast<int>(i);
                EXPECT_LE(std::fabs(profile[i] - limit_fraction_value(j, k) * static_cast<double>(n)), degree_l1_bound(k));
            }
        }
    }
    EXPECT_NEAR(expected_degree_count(10000, 3, 3) / 1e4, 0.4, 1e-3);
}

TEST(LabelDegreePmf, ExamplesAndNormalization) {
    EXPECT_EQ(label_degree_pmf(4, 4, 3).at(0), Rational(1));
    EXPECT_EQ(label_degree_pmf(2, 1, 3).at(1), Rational(1));
    for (int k = 3; k <= 5; ++k) {
        for (std::uint64_t j = 1; j <= 3; ++j) {
            for (std::uint64_t span = 0; span <= 10; ++span) {
                const auto pmf = label_degree_pmf(j + span, j, k);
                Rational total = 0;
                for (const auto& [d, p] : pmf) {
                    EXPECT_GE(p, 0);
                    EXPECT_LE(p, 1);
                    total += p;
                }
                EXPECT_EQ(total, Rational(1));
                EXPECT_EQ(pmf.at(0), label_degree_pmf_term(j + span, j, k, 0));
            }
        }
    }
}

TEST(LabelDegreePmf, MatchesUrnOracle) {
    for (int k = 3; k <= 5; ++k) {
        for (int j = 1; j <= 3; ++j) {
            for (int n = j; n <= j + 6; ++n) {
                const auto truth = oracle::label_degree_distribution_urn(k, n, j);
                for (const auto& [d, p] : label_degree_pmf(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(j), k)) {
                    const auto it = truth.find(k + static_cast<int>(d));
                    EXPECT_EQ(p, it == truth.end() ? Rational(0) : it->second);
                }
            }
        }
    }
}

TEST(LabelDegreePmf, MatchesHistoryEnumeration) {
    for (const auto& [k, n] : std::vector<std::pair<int, int>>{{3, 4}, {4, 3}, {5, 3}}) {
        for (int j = 1; j <= n; ++j) {
            const auto truth = oracle::label_degree_distribution(k, n, j);
            for (const auto& [d, p] : label_degree_pmf(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(j), k)) {
                const auto it = truth.find(k + static_cast<int>(d));
                EXPECT_EQ(p, it == truth.end() ? Rational(0) : it->second);
            }
        }
    }
}

TEST(LabelDegreePmf, SpanLimitEnforced) {
    EXPECT_THROW(label_degree_pmf(100, 1, 3), DomainError);
    EXPECT_THROW(label_degree_pmf(3, 4, 3), DomainError);
    EXPECT_THROW(label_degree_pmf(3, 0, 3), DomainError);
}

TEST(LabelDegreeMoment, ExamplesAndPmfCrossCheck) {
    EXPECT_NEAR(label_degree_moment(2, 1, 3, 1), 4.0, 1e-12);
    EXPECT_NEAR(label_degree_moment(7, 7, 5, 1), 5.0, 1e-12);
    for (int k = 3; k <= 5; ++k) {
        for (int s = 1; s <= 3; ++s) {
            const auto pmf = label_degree_pmf(6, 2, k);
            Rational m = 0;
            for (const auto& [d, p] : pmf) {
                Rational x = k + static_cast<int>(d);
                Rational xs = 1;
                for (int i = 0; i < s; ++i) xs *= x;
                m += p * xs;
            }
            EXPECT_NEAR(label_degree_moment(6, 2, k, s) / to_double(m), 1.0, 1e-9) << k << " " << s;
        }
    }
}

TEST(LabelDegreeMoment, LargeSpanUsesLogGammaPath) {
    // Exact path at n - j = 256 and the log-gamma path at 257 agree smoothly.
    const double a = label_degree_moment(257, 1, 3, 1);
    const double b = label_degree_moment(258, 1, 3, 1);
    EXPECT_GT(b, a);
    EXPECT_LT(b - a, 1.0);
}

TEST(AsymptoticMean, Regimes) {
    const auto at_n = label_degree_asymptotic_mean(1000, 1000, 3);
    EXPECT_EQ(at_n.regime, MeanRegime::Linear);
    EXPECT_DOUBLE_EQ(at_n.alpha, 1.0);
    EXPECT_NEAR(at_n.value, 3.0, 1e-12);

    const auto early = label_degree_asymptotic_mean(1000000, 1, 3);
    EXPECT_EQ(early.regime, MeanRegime::Sublinear);
    EXPECT_NEAR(early.value, 3.0 * 1000.0 * std::tgamma(1.5), 1e-6);

    const double exact = label_degree_moment(100000, 1, 3, 1);
    EXPECT_NEAR(exact / label_degree_asymptotic_mean(100000, 1, 3).value, 1.0, 0.05);
}

TEST(Clustering, NewcomerFormula) {
    EXPECT_DOUBLE_EQ(newcomer_clustering(3, 3), 1.0);
    EXPECT_DOUBLE_EQ(newcomer_clustering(5, 5), 1.0);
    EXPECT_DOUBLE_EQ(newcomer_clustering(4, 3), 5.0 / 6.0);
}

TEST(Clustering, TableClosedForms) {
    for (int k = 3; k <= 10; ++k) {
        EXPECT_NEAR(clustering_limit(k), static_cast<double>(table2(k)), 1e-9) << "k=" << k;
    }
    EXPECT_NEAR(clustering_limit(3), 0.768586, 1e-6);
}

TEST(Clustering, SeriesAgreesWithHypergeometric) {
    for (int k = 3; k <= 10; ++k) EXPECT_NEAR(clustering_limit_series(k), clustering_limit(k), 1e-8) << "k=" << k;
}

TEST(Clustering, CliqueWeightedLimitReducesAtThree) {
    EXPECT_NEAR(clique_weighted_clustering_limit(3), clustering_limit(3), 1e-8);
    EXPECT_NEAR(clique_weighted_limit_fraction(7, 3), limit_fraction_value(7, 3), 1e-15);
    EXPECT_LT(clique_weighted_clustering_limit(4), clustering_limit(4));
    double sum = 0.0;
    for (int j = 4; j < 200000; ++j) sum += clique_weighted_limit_fraction(j, 4);
    EXPECT_NEAR(sum, 1.0, 1e-4);
}

TEST(Lorenz, ShapeAndEndpoints) {
    for (int k = 3; k <= 6; ++k) {
        const auto pts = theoretical_lorenz(10, k);
        ASSERT_EQ(pts.size(), 12u);
        EXPECT_DOUBLE_EQ(pts.front().position, 0.0);
        EXPECT_DOUBLE_EQ(pts.front().cumulative, 0.0);
        for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_GE(pts[i].cumulative, pts[i - 1].cumulative);
        EXPECT_NEAR(pts.back().cumulative, to_double(partial_sum_fractions(10, k)), 1e-15);
    }
}

TEST(Lorenz, ExactPointsAreAscendingTailSums) {
    const int k = 3;
    const std::uint64_t n = 10;
    const auto exact = theoretical_lorenz_exact(n, k);
    ASSERT_EQ(exact.size(), n + 2);
    for (std::uint64_t i = 0; i <= n + 1; ++i) {
        Rational direct = 0;
        for (std::uint64_t j = k + n - i + 1; j <= k + n; ++j) direct += limit_fraction(static_cast<int>(j), k);
        EXPECT_EQ(exact[i], direct) << i;
    }
}

TEST(Gini, ClosedFormEqualsTrapezoid) {
    for (int k = 3; k <= 10; ++k) {
        for (std::uint64_t n : {1ULL, 2ULL, 10ULL, 100ULL, 5000ULL}) {
            EXPECT_NEAR(theoretical_gini(n, k), theoretical_gini_trapezoid(n, k), 1e-9) << k << " " << n;
        }
    }
    EXPECT_NEAR(theoretical_gini(10, 3), 0.6285714285714286, 1e-12);
}

TEST(Gini, TendsToOneAndQuotedFormOnlyAgreesAsymptotically) {
    EXPECT_GT(theoretical_gini(1000000, 3), 0.9999);
    EXPECT_GT(std::fabs(theoretical_gini_quoted(10, 3) - theoretical_gini(10, 3)), 0.01);
    EXPECT_NEAR(theoretical_gini_quoted(1000000, 3), theoretical_gini(1000000, 3), 1e-4);
}

TEST(Depth, ExamplesAndDigammaForm) {
    EXPECT_DOUBLE_EQ(expected_total_depth(1, 3), 3.0);
    EXPECT_NEAR(expected_total_depth(2, 3), 8.0, 1e-12);
    EXPECT_NEAR(expected_total_depth(3, 3), 14.2, 1e-12);
    for (int k = 3; k <= 8; ++k) {
        for (std::uint64_t n : {1ULL, 5ULL, 50ULL, 1000ULL, 100000ULL}) {
            const double direct = expected_total_depth(n, k);
            EXPECT_NEAR(expected_total_depth_digamma(n, k) / direct, 1.0, 1e-9) << k << " " << n;
        }
    }
}

TEST(Depth, SecondMomentExamples) {
    for (int k = 3; k <= 6; ++k) EXPECT_NEAR(total_depth_second_moment(1, k), k * k, 1e-9);
    EXPECT_NEAR(total_depth_second_moment(2, 3), 64.0, 1e-9);
    EXPECT_NEAR(total_depth_second_moment(3, 3), 202.6, 1e-9);
}

TEST(Depth, MomentsMatchEnumeration) {
    for (const auto& [k, nmax] : std::vector<std::pair<int, int>>{{3, 5}, {4, 3}, {5, 2}}) {
        for (int n = 1; n <= nmax; ++n) {
            const auto truth = oracle::total_depth_moments(k, n);
            const auto exact = exact_total_depth_moments(static_cast<std::uint64_t>(n), k);
            EXPECT_EQ(exact.mean, truth.mean);
            EXPECT_EQ(exact.second_moment, truth.second);
            EXPECT_NEAR(total_depth_second_moment(static_cast<std::uint64_t>(n), k), to_double(truth.second), 1e-9);
            EXPECT_NEAR(expected_total_depth(static_cast<std::uint64_t>(n), k), to_double(truth.mean), 1e-9);
        }
    }
}

TEST(Depth, VarianceNonNegativeAndSmallRelativeToMean) {
    for (std::uint64_t n : {10ULL, 1000ULL, 100000ULL}) {
        const double m = expected_total_depth(n, 3);
        const double var = total_depth_second_moment(n, 3) - m * m;
        EXPECT_GE(var, 0.0);
        EXPECT_LT(std::sqrt(var) / m, 0.2);
    }
}

TEST(Diameter, KnownConstantAndResiduals) {
    const auto d = diameter_constants(3);
    EXPECT_NEAR(d.c, 1.668, 0.002);
    EXPECT_DOUBLE_EQ(d.c, 2.0 * d.height_constant);
    EXPECT_NEAR(d.eta_star - 1.0 - std::log(d.eta_star), std::log(3.0), 1e-10);
    EXPECT_NEAR(diameter_a_equation_log(d.a, 3), 0.0, 1e-10);
    double prev = 1e9;
    for (int k : {3, 4, 5, 6, 8, 10, 20, 50, 100, 200}) {
        const auto dk = diameter_constants(k);
        EXPECT_LE(dk.eta_residual, 1e-10);
        EXPECT_LE(dk.a_residual, 1e-10);
        EXPECT_LT(dk.c, prev);
        prev = dk.c;
    }
}

TEST(Diameter, HeightConstantScaling) {
    const auto d = diameter_constants(200);
    EXPECT_NEAR(d.height_constant * 200 * std::log(2.0), 1.0, 0.05);
}

TEST(Report, AggregatesConsistently) {
    const auto r = make_theory_report(3, 100, 12);
    EXPECT_EQ(r.b_fractions.size(), 10u);
    EXPECT_EQ(r.b_fractions.at(3).first, Rational(2, 5));
    EXPECT_DOUBLE_EQ(r.clustering_limit, clustering_limit(3));
    EXPECT_DOUBLE_EQ(r.depth_mean, expected_total_depth(100, 3));
    EXPECT_EQ(r.lorenz_points.size(), 102u);
}
