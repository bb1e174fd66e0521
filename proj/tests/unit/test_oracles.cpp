// Sanity checks of the reference implementations themselves.
#include <gtest/gtest.h>

#include "oracles.hpp"

using oracle::Rational;

TEST(Oracle, HistoryProbabilitiesSumToOne) {
    for (int k = 3; k <= 5; ++k) {
        for (int n = 0; n <= 3; ++n) {
            Rational total = 0;
            oracle::enumerate_histories(k, n, [&](const oracle::State&, const Rational& p) { total += p; });
            EXPECT_EQ(total, Rational(1));
        }
    }
}

TEST(Oracle, StepAddsKEdgesAndKMinusOneCliques) {
    auto s = oracle::initial_state(4);
    const auto t = oracle::step(s, 0);
    EXPECT_EQ(t.vertices(), 5);
    EXPECT_EQ(t.active.size(), 4u);
    EXPECT_EQ(t.degree(4), 4);
}

TEST(Oracle, EnumerationAndUrnAgree) {
    for (int k = 3; k <= 4; ++k) {
        for (int n = 1; n <= 4; ++n) {
            for (int j = 1; j <= n; ++j) {
                EXPECT_EQ(oracle::label_degree_distribution(k, n, j), oracle::label_degree_distribution_urn(k, n, j));
            }
        }
    }
}

TEST(Oracle, KnownSmallDistributions) {
    EXPECT_EQ(oracle::label_degree_distribution(3, 2, 1), (std::map<int, Rational>{{4, Rational(1)}}));
    const auto d = oracle::total_depth_moments(3, 3);
    EXPECT_EQ(d.mean, Rational(71, 5));
    EXPECT_EQ(d.second, Rational(1013, 5));
}

TEST(Oracle, FloydWarshallOnPath) {
    const std::vector<std::vector<std::uint32_t>> path{{1}, {0, 2}, {1, 3}, {2}};
    const auto r = oracle::floyd_warshall(path);
    EXPECT_EQ(r.wiener, 10u);
    EXPECT_EQ(r.diameter, 3u);
}

TEST(Oracle, GiniMeanDifference) {
    EXPECT_DOUBLE_EQ(oracle::gini_mean_difference({3, 3, 3}), 0.0);
    EXPECT_DOUBLE_EQ(oracle::gini_mean_difference({0, 1}), 0.5);
}
