#include "cylsolid/arctan.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/reference.hpp"

namespace cylsolid {
namespace {

TEST(ArctanSum, Origin)
{
    EXPECT_EQ(arctan_sum(0, 0, Sign::Plus), 0);
    EXPECT_EQ(arctan_sum(0, 0, Sign::Minus), 0);
}

TEST(ArctanSum, SingleTerm)
{
    EXPECT_DOUBLE_EQ(arctan_sum(1, 0, Sign::Plus), std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(arctan_sum(0, 1, Sign::Minus), -std::numbers::pi / 4);
}

TEST(ArctanSum, BeyondPrincipalRange)
{
    // atan(x) + atan(y) > pi/2 here; the one-call arctan of (x+y)/(1-xy) would wrap.
    EXPECT_NEAR(arctan_sum(3, 4, Sign::Plus), std::atan(3.0) + std::atan(4.0), 1e-15);
    EXPECT_NEAR(arctan_sum(-3, 4, Sign::Minus), std::atan(-3.0) - std::atan(4.0), 1e-15);
    EXPECT_NEAR(arctan_sum(1e300, 1e300, Sign::Plus), std::numbers::pi, 1e-15);
}

TEST(ArctanSum, RandomPairs)
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10000; ++i) {
        const double x = test::uniform(rng, -1e3, 1e3);
        const double y = test::uniform(rng, -1e3, 1e3);
        EXPECT_NEAR(arctan_sum(x, y, Sign::Plus), std::atan(x) + std::atan(y), 1e-14);
        EXPECT_NEAR(arctan_sum(x, y, Sign::Minus), std::atan(x) - std::atan(y), 1e-14);
    }
}

} // namespace
} // namespace cylsolid
