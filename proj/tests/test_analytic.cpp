#include "cylsolid/analytic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cylsolid/error.hpp"
#include "cylsolid/oracle.hpp"
#include "support/reference.hpp"

namespace cylsolid {
namespace {

using test::kPi;

// Values below were frozen from 30-digit adaptive quadrature of the defining
// integrals, computed outside this code base.
constexpr double kF1_5_2_1_02 = 0.243841820090280900;
constexpr double kF2_5_2_1_09 = 0.147657102764686750;
constexpr double kF3_1_0_1 = 0.0908450569081046642;
constexpr double kF3_2_05_1_18 = 0.0146388611592749318;
constexpr double kF3_2_05_1_half_pi = 0.0186457671656301948;

TEST(F1, FrozenQuadratureValue)
{
    EXPECT_NEAR(f1(5, 2, 1, 0.2), kF1_5_2_1_02, 1e-13);
}

TEST(F1, EqualRadius)
{
    EXPECT_NEAR(f1(3, 1, 1, kPi / 3), 0.375, 1e-15);
    EXPECT_EQ(evaluate_f1(3, 1, 1, kPi / 3).branch, Branch::EqualRadius);
}

TEST(F1, DarkAndFlat)
{
    const AnalyticTerms dark = evaluate_f1(5, 2, 1, 2 * kPi / 3 + 1e-12);
    EXPECT_EQ(dark.value, 0);
    EXPECT_EQ(dark.branch, Branch::Dark);
    EXPECT_EQ(f1(5, 2, 1, kPi), 0);
    EXPECT_EQ(f1(0, 2, 1, 0.2), 0);
}

TEST(F1, DomainErrors)
{
    EXPECT_THROW(f1(1, 0.5, 1, 0), Error);
    EXPECT_THROW(f1(-1, 2, 1, 0), Error);
    EXPECT_THROW(f1(1, 2, 1, -0.1), Error);
    EXPECT_THROW(f1(1, 2, 1, 4), Error);
}

TEST(F2, FrozenQuadratureValue)
{
    EXPECT_NEAR(f2(5, 2, 1, 0.9), kF2_5_2_1_09, 1e-13);
}

TEST(F2, VanishesWithL)
{
    for (double d : {1.0, 1.5, 4.0}) {
        for (double alpha : {0.0, 0.5, 1.2, 2.0}) {
            EXPECT_NEAR(f2(1e-8, d, 1, alpha), 0, 1e-6) << d << " " << alpha;
            EXPECT_EQ(f2(0, d, 1, alpha), 0);
        }
    }
}

TEST(F2, EqualRadiusEndpoints)
{
    EXPECT_EQ(f2(2, 1, 1, kPi), 0);
    const double s = std::sqrt(1 - std::pow(2.0 / (4 + 2), 2));
    EXPECT_NEAR(f2(2, 1, 1, 0), 0.5 + 1 * (1 - 1 / s), 1e-15);
}

TEST(F2, EqualRadiusAgainstQuadrature)
{
    for (double L : {0.01, 0.1, 1.0, 10.0, 100.0}) {
        for (double alpha = 0; alpha < kPi; alpha += 0.05) {
            const double q = quad_f2(L, 1, 1, alpha, 1e-12).value;
            EXPECT_NEAR(f2(L, 1, 1, alpha), q, 1e-11) << L << " " << alpha;
        }
    }
}

struct RelationCheck {
    double lhs;
    double rhs;
    double f2;
};

RelationCheck relation(double L, double d, double r, double alpha)
{
    const AnalyticTerms t = evaluate_f2(L, d, r, alpha);
    const double s = *t.sqrt_one_minus_m2;
    const double m = *t.m;
    // 1 - 1/s written as -m^2/(s(1 + s)).
    const double rhs = std::cos(alpha) * L / (2 * d) * (-m * m / (s * (1 + s)));
    return {t.value - f1(L, d, r, alpha), rhs, t.value};
}

TEST(F2, MinusF1BelowAlpha1)
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 2000; ++i) {
        const double r = test::uniform(rng, 0.2, 3);
        const double d = r * test::uniform(rng, 1.01, 5);
        const double L = r * test::uniform(rng, 0.1, 10);
        const double alpha1 = silhouette_angles(d, r)->alpha1;
        const RelationCheck c = relation(L, d, r, test::uniform(rng, 0, alpha1 * 0.999));
        EXPECT_NEAR(c.lhs, c.rhs, 1e-12 * std::abs(c.rhs)) << i;
    }
}

TEST(F2, MinusF1FarField)
{
    // Far away or for long cylinders the remainder drops to ~1e-4 of F2, and
    // the subtraction of two rounded F values sets the floor.
    std::mt19937_64 rng(9);
    for (int i = 0; i < 2000; ++i) {
        const double r = test::uniform(rng, 0.2, 3);
        const double d = r * test::uniform(rng, 1.01, 20);
        const double L = r * test::uniform(rng, 0.01, 30);
        const double alpha1 = silhouette_angles(d, r)->alpha1;
        const RelationCheck c = relation(L, d, r, test::uniform(rng, 0, alpha1 * 0.999));
        EXPECT_NEAR(c.lhs, c.rhs, 1e-12 * std::abs(c.rhs) + 4e-16 * c.f2) << i;
    }
}

TEST(F3, FlatIsHalf)
{
    for (double d : {0.0, 0.3, 0.999})
        for (double alpha : {0.0, 1.0, kPi})
            EXPECT_EQ(f3(0, d, 1, alpha), 0.5);
}

TEST(F3, OnAxis)
{
    for (double alpha : {0.0, 0.7, kPi})
        EXPECT_NEAR(f3(1, 0, 1, alpha), kF3_1_0_1, 1e-15);
    EXPECT_NEAR(kF3_1_0_1, 0.5 - (kPi / 4 + 0.5) / kPi, 1e-16);
    EXPECT_EQ(evaluate_f3(1, 0, 1, 0.3).branch, Branch::OnAxis);
}

TEST(F3, FrozenQuadratureValues)
{
    EXPECT_NEAR(f3(2, 0.5, 1, 1.8), kF3_2_05_1_18, 1e-13);
    EXPECT_NEAR(f3(2, 0.5, 1, kPi / 2), kF3_2_05_1_half_pi, 1e-13);
}

TEST(F3, ContinuousAcrossHalfPi)
{
    for (double d : {1e-6, 0.1, 0.5, 0.9, 0.999999}) {
        for (double L : {1e-4, 0.1, 1.0, 10.0}) {
            const double lo = f3(L, d, 1, kPi / 2 - 1e-6);
            const double hi = f3(L, d, 1, kPi / 2 + 1e-6);
            EXPECT_LE(std::abs(hi - lo), 1e3 * 1e-6) << d << " " << L;
            EXPECT_TRUE(std::isfinite(f3(L, d, 1, kPi / 2)));
        }
    }
}

TEST(F3, EqualRadiusLimit)
{
    // d -> r first, then L -> 0, reaches the lateral-surface value.
    for (double alpha : {0.0, 0.5, kPi / 2, 2.5}) {
        const double v = f3(1e-4, 1 - 1e-10, 1, alpha);
        EXPECT_NEAR(v, (1 + std::cos(alpha)) / 4, 1e-3) << alpha;
    }
}

TEST(F3, AgainstQuadrature)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 300; ++i) {
        const double r = test::uniform(rng, 0.2, 3);
        const double d = r * std::pow(10.0, test::uniform(rng, -8, 0)) * 0.999;
        const double L = r * std::pow(10.0, test::uniform(rng, -3, 2));
        const double alpha = test::uniform(rng, 0, kPi);
        EXPECT_NEAR(f3(L, d, r, alpha), quad_f3(L, d, r, alpha, 1e-12).value, 1e-10)
            << L << " " << d << " " << r << " " << alpha;
    }
}

TEST(F3, DomainErrors)
{
    EXPECT_THROW(f3(1, 1, 1, 0), Error);
    EXPECT_THROW(f3(1, 2, 1, 0), Error);
}

TEST(Lateral, AgainstQuadrature)
{
    std::mt19937_64 rng(34);
    for (int i = 0; i < 300; ++i) {
        const double r = test::uniform(rng, 0.2, 3);
        const double d = r * (1 + std::pow(10.0, test::uniform(rng, -6, 1.5)));
        const double L = r * std::pow(10.0, test::uniform(rng, -3, 2));
        const double alpha = test::uniform(rng, 0, kPi);
        EXPECT_NEAR(f1(L, d, r, alpha), quad_f1(L, d, r, alpha, 1e-12).value, 1e-10)
            << L << " " << d << " " << r << " " << alpha;
        EXPECT_NEAR(f2(L, d, r, alpha), quad_f2(L, d, r, alpha, 1e-12).value, 1e-10)
            << L << " " << d << " " << r << " " << alpha;
    }
}

TEST(Antiderivative, EvenDifference)
{
    const double phi0 = silhouette_angles(2, 1)->phi0;
    const double diff = f1_antiderivative(5, 2, 1, 0, phi0) - f1_antiderivative(5, 2, 1, 0, -phi0);
    EXPECT_NEAR(diff, f1(5, 2, 1, 0), 1e-14);
    const double diff2 =
        f2_antiderivative(5, 2, 1, 0.2, phi0) - f2_antiderivative(5, 2, 1, 0.2, -phi0);
    EXPECT_NEAR(diff2, f2(5, 2, 1, 0.2), 1e-14);
}

TEST(Antiderivative, FlatIsZero)
{
    for (double phi : {-0.5, 0.0, 0.3})
        EXPECT_EQ(f1_antiderivative(0, 2, 1, 0.4, phi), 0);
}

TEST(Antiderivative, OutsideSilhouette)
{
    EXPECT_THROW(f1_antiderivative(1, 2, 1, 0, 0.6), Error);
    EXPECT_THROW(f2_antiderivative(1, 2, 1, 0, -0.6), Error);
}

TEST(Antiderivative, FiniteDifferences)
{
    std::mt19937_64 rng(55);
    const double h = 1e-6;
    for (int i = 0; i < 1000; ++i) {
        const double r = test::uniform(rng, 0.2, 3);
        const double d = r * test::uniform(rng, 1.05, 10);
        const double L = test::uniform(rng, 0.05, 20);
        const double alpha = test::uniform(rng, 0, kPi);
        const double phi0 = silhouette_angles(d, r)->phi0;
        const double phi = test::uniform(rng, -phi0 + 10 * h, phi0 - 10 * h);
        const auto [rho_minus, rho_plus] = test::naive_rho(phi, d, r);

        const double g1 = test::lateral_integrand(L, rho_minus, alpha, phi);
        const double g2 = test::lateral_integrand(L, rho_plus, alpha, phi);
        const double fd1 = test::central_difference(
            [&](double p) { return f1_antiderivative(L, d, r, alpha, p); }, phi, h);
        const double fd2 = test::central_difference(
            [&](double p) { return f2_antiderivative(L, d, r, alpha, p); }, phi, h);
        EXPECT_NEAR(fd1, g1, 1e-6 * std::max(std::abs(g1), 1e-3)) << i;
        EXPECT_NEAR(fd2, g2, 1e-6 * std::max(std::abs(g2), 1e-3)) << i;
    }
}

TEST(Terms, Invariants)
{
    std::mt19937_64 rng(89);
    for (int i = 0; i < 500; ++i) {
        const double r = test::uniform(rng, 0.2, 3);
        const double d = test::uniform(rng, 0.01, 5);
        const double L = test::uniform(rng, 0.01, 10);
        const double alpha = test::uniform(rng, 0, kPi);
        if (std::abs(d - r) < 1e-3)
            continue;
        const AnalyticTerms t = d > r ? evaluate_f1(L, d, r, alpha) : evaluate_f3(L, d, r, alpha);
        if (!t.m)
            continue;
        const double S = L * L + d * d + r * r;
        EXPECT_NEAR(*t.m, 2 * d * r / S, 1e-15);
        EXPECT_GT(*t.m, 0);
        EXPECT_LT(*t.m, 1);
        EXPECT_NEAR(*t.sqrt_one_minus_m2, std::sqrt(1 - *t.m * *t.m),
                    1e-12 * *t.sqrt_one_minus_m2);
        if (t.rho_tilde_minus) {
            EXPECT_NEAR(*t.rho_tilde_minus * *t.rho_tilde_plus, d * d - r * r,
                        1e-12 * std::abs(d * d - r * r));
            EXPECT_NEAR(*t.rho_tilde_plus,
                        d * std::sin(alpha) + std::sqrt(r * r - std::pow(d * std::cos(alpha), 2)),
                        1e-12 * d);
        }
    }
}

TEST(Terms, TransitionCarriesTangents)
{
    const AnalyticTerms t = evaluate_f2(5, 2, 1, 1.5);
    EXPECT_EQ(t.branch, Branch::Transition);
    ASSERT_TRUE(t.a && t.b && t.E);
    EXPECT_NEAR(*t.a, -std::sqrt(3.0), 1e-15);
    const AnalyticTerms t3 = evaluate_f3(2, 0.5, 1, 1.0);
    EXPECT_EQ(t3.branch, Branch::OffAxis);
    EXPECT_TRUE(t3.G && t3.H && t3.z && t3.dt1 && t3.dt2);
}

TEST(Omega, FrozenCaseI)
{
    EXPECT_NEAR(omega(classify({1, 2, -5, 5, 0})).value, 0.497602562118550655, 1e-13);
    EXPECT_NEAR(omega(classify({1, 2, -5, 5, 0.3})).value, 0.475377884674242462, 1e-13);
}

TEST(Omega, FrozenCaseII)
{
    const SolidAngle sa = omega(classify({1, 2, 5, 15, 0.5}));
    EXPECT_NEAR(sa.value, 0.0108934933515900053, 1e-13);
    ASSERT_TRUE(sa.breakdown);
    EXPECT_NEAR(sa.breakdown->cylinder, 0.00101060720973310909, 1e-13);
    EXPECT_NEAR(sa.breakdown->circle, 0.00988288614185689624, 1e-13);
    EXPECT_NEAR(sa.breakdown->cylinder + sa.breakdown->circle, sa.value, 1e-12);
}

TEST(Omega, Dark)
{
    EXPECT_EQ(omega(classify({1, 2, -5, 5, 2.3})).value, 0);
    EXPECT_EQ(omega(classify({1, 2, 5, 15, -2.3})).value, 0);
}

TEST(Omega, CaseIIIPlateau)
{
    for (double d : {0.0, 0.2, 0.5, 0.99})
        for (double alpha : {-3.0, 0.0, 1.0, kPi})
            EXPECT_EQ(omega(classify({1, d, 0, 3, alpha})).value, 0.5);
}

TEST(Omega, EndPlaneMatchesHalfCylinder)
{
    const double full = omega(classify({1, 2, -5, 5, 0.4})).value;
    const double half = omega(classify({1, 2, 0, 5, 0.4})).value;
    EXPECT_NEAR(half, full / 2, 1e-15);
    // Limit from CaseII as z1 -> 0+.
    EXPECT_NEAR(omega(classify({1, 2, 1e-9, 5, 0.4})).value, half, 1e-8);
}

TEST(Omega, Evenness)
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const double r = test::uniform(rng, 0.2, 3);
        const double d = test::uniform(rng, 0, 4 * r);
        const bool inside = d < r;
        const double z1 = inside ? test::uniform(rng, 0, 5) : test::uniform(rng, -5, 5);
        const double z2 = z1 + test::uniform(rng, 0.1, 10);
        const double alpha = test::uniform(rng, -kPi, kPi);
        EXPECT_EQ(omega(classify({r, d, z1, z2, alpha})).value,
                  omega(classify({r, d, z1, z2, -alpha})).value);
    }
}

TEST(Omega, CosineLaw)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        const double r = test::uniform(rng, 0.2, 3);
        const double d = r * test::uniform(rng, 1.01, 10);
        const double z1 = test::uniform(rng, -5, 5);
        const double z2 = z1 + test::uniform(rng, 0.1, 10);
        const double alpha1 = silhouette_angles(d, r)->alpha1;
        const double base = omega(classify({r, d, z1, z2, 0})).value;
        for (int k = 1; k <= 20; ++k) {
            const double alpha = (alpha1 - 1e-6) * k / 20;
            const double v = omega(classify({r, d, z1, z2, alpha})).value;
            EXPECT_NEAR(v / std::cos(alpha), base, 1e-10 * base) << i << " " << k;
        }
    }
}

TEST(Omega, MonotoneInAlpha)
{
    for (double d : {1.0, 1.01, 1.5, 2.0, 4.0}) {
        for (const auto& [z1, z2] : {std::pair{-5.0, 5.0}, {5.0, 15.0}, {0.1, 3.0}}) {
            const double alphac = silhouette_angles(d, 1)->alphac;
            double prev = 2;
            for (int k = 0; k <= 1000; ++k) {
                const double v = omega(classify({1, d, z1, z2, alphac * k / 1000})).value;
                EXPECT_LE(v, prev + 1e-15) << d << " " << z1 << " " << k;
                prev = v;
            }
            EXPECT_EQ(prev, 0);
        }
    }
}

TEST(Omega, ContinuousAtAlpha1)
{
    for (double d : {1.001, 1.5, 2.0, 10.0}) {
        const double alpha1 = silhouette_angles(d, 1)->alpha1;
        for (const auto& [z1, z2] : {std::pair{-5.0, 5.0}, {5.0, 15.0}}) {
            const double lo = omega(classify({1, d, z1, z2, alpha1 - 1e-6})).value;
            const double hi = omega(classify({1, d, z1, z2, alpha1 + 1e-6})).value;
            EXPECT_LE(std::abs(lo - hi), 1e3 * 1e-6);
        }
        EXPECT_NEAR(f1(2, d, 1, alpha1), f1(2, d, 1, std::nextafter(alpha1, 0.0)), 1e-12);
        EXPECT_NEAR(f2(2, d, 1, alpha1), f2(2, d, 1, std::nextafter(alpha1, 0.0)), 1e-12);
    }
}

TEST(Omega, TraceRecordsEvaluations)
{
    std::vector<AnalyticTerms> trace;
    omega(classify({1, 2, 5, 15, 0.5}), &trace);
    ASSERT_EQ(trace.size(), 3u);
    EXPECT_EQ(trace[0].integral, Integral::F1);
    EXPECT_EQ(trace[0].L, 15);
    EXPECT_EQ(trace[2].integral, Integral::F2);
    trace.clear();
    omega(classify({1, 0.5, 2, 3, 0.5}), &trace);
    ASSERT_EQ(trace.size(), 1u);
    EXPECT_EQ(trace[0].integral, Integral::F3);
}

} // namespace
} // namespace cylsolid
