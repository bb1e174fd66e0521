#include <gtest/gtest.h>

#include <vector>

#include "hdran/rng.hpp"

using hdran::SplitMix64;
using hdran::Xoshiro256;

TEST(SplitMix64, KnownFirstOutputForSeedZero) {
    SplitMix64 g(0);
    EXPECT_EQ(g.next(), 0xe220a8397b1dcdafULL);
}

TEST(Xoshiro256, ReferenceOutputsFromExplicitState) {
    Xoshiro256 g(Xoshiro256::State{1, 2, 3, 4});
    EXPECT_EQ(g.next(), 11520ULL);
    EXPECT_EQ(g.next(), 0ULL);
    EXPECT_EQ(g.next(), 1509978240ULL);
    EXPECT_EQ(g.next(), 1215971899390074240ULL);
}

TEST(Xoshiro256, SeedingUsesFourSplitMixOutputs) {
    SplitMix64 sm(42);
    const Xoshiro256::State expected{sm.next(), sm.next(), sm.next(), sm.next()};
    EXPECT_EQ(Xoshiro256(42).state(), expected);
}

TEST(Xoshiro256, SameSeedSameStream) {
    Xoshiro256 a(99), b(99), c(100);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        EXPECT_EQ(x, b.next());
        differs = differs || x != c.next();
    }
    EXPECT_TRUE(differs);
}

TEST(Xoshiro256, BoundedStaysInRange) {
    Xoshiro256 g(5);
    for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL, (1ULL << 63) + 1}) {
        for (int i = 0; i < 1000; ++i) EXPECT_LT(g.bounded(bound), bound);
    }
}

TEST(Xoshiro256, BoundedIsRoughlyUniform) {
    Xoshiro256 g(11);
    constexpr int kBins = 7;
    constexpr int kDraws = 70000;
    std::vector<int> counts(kBins, 0);
    for (int i = 0; i < kDraws; ++i) ++counts[g.bounded(kBins)];
    double chi2 = 0.0;
    const double expected = static_cast<double>(kDraws) / kBins;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    EXPECT_LT(chi2, 22.5);  // 6 dof, p ~ 0.001
}

TEST(Xoshiro256, Uniform01InUnitInterval) {
    Xoshiro256 g(3);
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = g.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 10000, 0.5, 0.02);
}
