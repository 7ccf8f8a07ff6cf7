#include "lagms/laguerre.hpp"
#include "lagms/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lagms;

TEST(LaguerreParams, RejectsAlphaAtOrBelowMinusOne)
{
    EXPECT_THROW(LaguerreParams(-1), std::invalid_argument);
    EXPECT_THROW(LaguerreParams(Rational(-3, 2)), std::invalid_argument);
    EXPECT_NO_THROW(LaguerreParams(Rational(-99, 100)));
}

TEST(LaguerrePoly, LowDegrees)
{
    EXPECT_EQ(laguerre_poly(0, LaguerreParams(Rational(7, 3))), Polynomial::constant(1));
    EXPECT_EQ(laguerre_poly(1, LaguerreParams(0)), (Polynomial{1, -1}));
    for (const Rational& a : {Rational(0), Rational(1, 2), Rational(3), Rational(-1, 2)}) {
        const Polynomial expected{(a + 2) * (a + 1) / 2, Rational(-(a + 2)), Rational(1, 2)};
        EXPECT_EQ(laguerre_poly(2, LaguerreParams(a)), expected) << "alpha=" << a;
    }
}

TEST(LaguerrePoly, LeadingCoefficient)
{
    for (const auto& p : identity_alphas())
        for (unsigned n = 0; n <= 12; ++n) {
            const Rational expected = Rational(n % 2 ? -1 : 1) / factorial(n);
            EXPECT_EQ(laguerre_poly(n, p).leading(), expected);
            EXPECT_EQ(laguerre_poly(n, p).degree(), static_cast<int>(n));
        }
}

TEST(LaguerreAtZero, Examples)
{
    EXPECT_EQ(laguerre_at_zero(0, LaguerreParams(Rational(5, 2))), 1);
    EXPECT_EQ(laguerre_at_zero(2, LaguerreParams(0)), 1);
    EXPECT_EQ(laguerre_at_zero(3, LaguerreParams(1)), 4);
    for (const auto& p : identity_alphas())
        for (unsigned n = 0; n <= 10; ++n)
            EXPECT_EQ(laguerre_at_zero(n, p), laguerre_poly(n, p)(0));
}

TEST(LaguerreBasisConversion, ShiftedSquare)
{
    const LaguerreParams p0(0);
    const auto c = to_laguerre_basis(Polynomial{100, -20, 1}, p0);
    EXPECT_EQ(c.coefficients(), (std::vector<Rational>{82, 16, 2}));
    EXPECT_EQ(from_laguerre_basis(LaguerreCoeffs(p0, {82, 16, 2})), (Polynomial{100, -20, 1}));
}

TEST(LaguerreBasisConversion, SquareOfLinearFactor)
{
    // (x+b)^2 = 2 L_2 - 2(alpha+2+b) L_1 + (alpha+b)^2 + 3 alpha + 2b + 2
    const LaguerreParams p0(0);
    EXPECT_EQ(to_laguerre_basis(Polynomial{0, 0, 1}, p0).coefficients(), (std::vector<Rational>{2, -4, 2}));
    for (const auto& p : identity_alphas())
        for (const Rational& b : {Rational(-3), Rational(0), Rational(5, 4), Rational(10)}) {
            const Rational& a = p.alpha();
            const std::vector<Rational> expected{(a + b) * (a + b) + 3 * a + 2 * b + 2, -2 * (a + 2 + b), 2};
            EXPECT_EQ(to_laguerre_basis(pow(Polynomial::linear(b), 2), p).coefficients(), expected);
        }
}

TEST(LaguerreBasisConversion, UnitVectors)
{
    const LaguerreParams p(Rational(3, 2));
    auto c = to_laguerre_basis(laguerre_poly(5, p), p).coefficients();
    EXPECT_EQ(c, (std::vector<Rational>{0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(from_laguerre_basis(LaguerreCoeffs(p, {1})), Polynomial::constant(1));
    EXPECT_EQ(from_laguerre_basis(LaguerreCoeffs(LaguerreParams(0), {0, 0, 1})),
              (Polynomial{1, -2, Rational(1, 2)}));
    EXPECT_TRUE(to_laguerre_basis(Polynomial{}, p).coefficients().empty());
}

TEST(LaguerreBasisConversion, RoundTripProperty)
{
    std::mt19937 rng(21);
    for (const auto& p : identity_alphas()) {
        LaguerreBasis basis(p, 12);
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> c(1 + rng() % 13);
            for (auto& v : c) {
                v = Rational(static_cast<int>(rng() % 41) - 20, 1 + static_cast<int>(rng() % 9));
                v.canonicalize();
            }
            const Polynomial q(c);
            EXPECT_EQ(from_laguerre_basis(to_laguerre_basis(q, basis), basis), q);
            EXPECT_EQ(from_laguerre_basis(to_laguerre_basis(q, p)), q);
        }
    }
}

TEST(LaguerreIdentities, OdeExamples)
{
    EXPECT_TRUE(check_ode(0, LaguerreParams(0)));
    EXPECT_TRUE(check_ode(2, LaguerreParams(0)));
    EXPECT_TRUE(check_ode(5, LaguerreParams(Rational(3, 2))));
}

TEST(LaguerreIdentities, RecurrenceExamples)
{
    EXPECT_TRUE(check_recurrences(1, LaguerreParams(0)));
    EXPECT_TRUE(check_recurrences(3, LaguerreParams(2)));
    EXPECT_TRUE(check_recurrences(6, LaguerreParams(Rational(1, 3))));
    EXPECT_THROW(check_recurrences(0, LaguerreParams(0)), std::invalid_argument);
}

TEST(LaguerreIdentities, HoldAcrossSampleSet)
{
    for (const auto& p : identity_alphas())
        for (unsigned n = 0; n <= 12; ++n) {
            EXPECT_TRUE(check_ode(n, p)) << n;
            if (n >= 1) {
                EXPECT_TRUE(check_recurrences(n, p)) << n;
            }
        }
}

TEST(LaguerreIdentities, GeneratingFunctionCoefficients)
{
    for (const auto& p : identity_alphas()) {
        auto series = laguerre_generating_series(p, 8);
        for (unsigned n = 0; n <= 8; ++n)
            EXPECT_EQ(series[n], laguerre_poly(n, p)) << "n=" << n;
    }
}
