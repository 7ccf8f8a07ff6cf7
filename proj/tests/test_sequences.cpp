#include "lagms/diffop.hpp"
#include "lagms/sequences.hpp"
#include "lagms/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lagms;

namespace {

Polynomial random_poly(std::mt19937& rng, unsigned degree)
{
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) {
        v = Rational(static_cast<int>(rng() % 21) - 10, 1 + static_cast<int>(rng() % 4));
        v.canonicalize();
    }
    c.back() = 1;
    return Polynomial(std::move(c));
}

} // namespace

TEST(SequenceValues, Examples)
{
    EXPECT_EQ(sequence_values(SequenceSpec::linear(1), 3), (std::vector<Rational>{1, 2, 3, 4}));
    EXPECT_EQ(sequence_values(SequenceSpec::falling_factorial(2), 4), (std::vector<Rational>{0, 0, 2, 6, 12}));
    EXPECT_EQ(sequence_values(SequenceSpec::geometric(2), 3), (std::vector<Rational>{1, 2, 4, 8}));
    EXPECT_EQ(sequence_values(SequenceSpec::quadratic(2, 1), 3), (std::vector<Rational>{1, 4, 9, 16}));
    EXPECT_EQ(sequence_values(SequenceSpec::trivial(2, 5, -3), 4), (std::vector<Rational>{0, 0, 5, -3, 0}));
    EXPECT_EQ(sequence_values(SequenceSpec::explicit_values({1, 2}), 3), (std::vector<Rational>{1, 2, 0, 0}));
}

TEST(SequenceValues, UnspecifiedTailRejectsLongPrefix)
{
    const auto s = SequenceSpec::explicit_values({1, 2, 3}, ExplicitTail::unspecified);
    EXPECT_NO_THROW(sequence_values(s, 2));
    EXPECT_THROW(sequence_values(s, 3), InsufficientPrefix);
    EXPECT_THROW(apply_diagonal(s, LaguerreParams(0), Polynomial::monomial(1, 3)), InsufficientPrefix);
    EXPECT_THROW(SequenceSpec::falling_factorial(0), std::invalid_argument);
}

TEST(ApplyDiagonal, SignedSequenceOnShiftedSquare)
{
    const auto s = SequenceSpec::explicit_values({1, -2, 3});
    const Polynomial image = apply_diagonal(s, LaguerreParams(0), Polynomial{100, -20, 1});
    EXPECT_EQ(image, (Polynomial{56, 20, 3}));
    EXPECT_FALSE(is_real_rooted(image).all_real);
}

TEST(ApplyDiagonal, AllOnesIsIdentity)
{
    std::mt19937 rng(17);
    for (const auto& p : identity_alphas())
        for (unsigned d = 0; d <= 12; ++d) {
            const Polynomial q = random_poly(rng, d);
            EXPECT_EQ(apply_diagonal(SequenceSpec::all_ones(), p, q), q);
        }
}

TEST(ApplyDiagonal, ScalesLaguerrePolynomials)
{
    for (const auto& p : identity_alphas())
        for (unsigned k = 0; k <= 6; ++k) {
            const Rational a(-5, 3);
            const Polynomial lk = laguerre_poly(k, p);
            EXPECT_EQ(apply_diagonal(SequenceSpec::linear(a), p, lk), lk * (a + k));
        }
}

TEST(ApplyDiagonal, MatchesDifferentialOperators)
{
    std::mt19937 rng(23);
    for (const auto& p : symbol_alphas())
        for (unsigned d = 0; d <= 10; ++d) {
            const Polynomial q = random_poly(rng, d);
            const Rational a(3, 2);
            EXPECT_EQ(apply_diagonal(SequenceSpec::linear(a), p, q), apply(delta(p, a), q));
            for (unsigned n = 1; n <= 3; ++n)
                EXPECT_EQ(apply_diagonal(SequenceSpec::falling_factorial(n), p, q),
                          apply(falling_factorial_operator(n, p), q));
        }
}

TEST(ApplyDiagonal, IsLinear)
{
    std::mt19937 rng(29);
    const auto s = SequenceSpec::explicit_values({2, -1, 0, 7, Rational(1, 3), 4, -2, 5});
    const LaguerreParams p(Rational(1, 2));
    for (int t = 0; t < 20; ++t) {
        const Polynomial f = random_poly(rng, rng() % 8), g = random_poly(rng, rng() % 8);
        const Rational r(static_cast<int>(rng() % 9) - 4, 3);
        EXPECT_EQ(apply_diagonal(s, p, f * r + g), apply_diagonal(s, p, f) * r + apply_diagonal(s, p, g));
    }
}

TEST(ApplyClassical, Examples)
{
    EXPECT_EQ(apply_classical(SequenceSpec::linear(0), Polynomial{1, 1, 1}), (Polynomial{0, 1, 2}));
    EXPECT_EQ(apply_classical(SequenceSpec::all_ones(), Polynomial{4, 0, -1, 2}), (Polynomial{4, 0, -1, 2}));
    const Rational r(-3, 2);
    EXPECT_EQ(apply_classical(SequenceSpec::geometric(r), pow(Polynomial{1, 1}, 2)), pow(Polynomial{1, r}, 2));
}

TEST(PolyaSchur, Examples)
{
    EXPECT_TRUE(polya_schur_test(SequenceSpec::linear(Rational(1, 2)), 10).ok);
    const auto bad = polya_schur_test(SequenceSpec::linear(Rational(-1, 2)), 2);
    const auto report = necessary_battery(SequenceSpec::linear(Rational(-1, 2)), 2);
    EXPECT_FALSE(report.passed());
    // {-1/2, 1/2, 3/2}: n=1 gives -1/2 + x/2, real; n=2 gives -1/2 + x + 3/2 x^2, discriminant 1+3 > 0.
    EXPECT_TRUE(bad.ok);
    EXPECT_FALSE(report.sign_pattern.ok);
    EXPECT_LE(*report.sign_pattern.first_failure, 2u);
}

TEST(PolyaSchur, FailureCarriesJensenPolynomial)
{
    // {1, 0, 1}: n=2 Jensen polynomial 1 + x^2
    const auto r = polya_schur_test(SequenceSpec::explicit_values({1, 0, 1}), 4);
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(*r.first_failure, 2u);
    EXPECT_EQ(r.witness, (Polynomial{1, 0, 1}));
}

TEST(Turan, Examples)
{
    EXPECT_TRUE(turan_test(SequenceSpec::linear(1), 10).ok);
    auto r = turan_test(SequenceSpec::explicit_values({1, 1, 2}), 1);
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(*r.first_failure, 1u);
    EXPECT_THROW(turan_test(SequenceSpec::explicit_values({1, 1, 2}, ExplicitTail::unspecified), 2),
                 InsufficientPrefix);
}

TEST(SignPattern, Examples)
{
    EXPECT_TRUE(sign_pattern_test(SequenceSpec::explicit_values({1, -2, 3, -4}), 6).ok);
    EXPECT_TRUE(sign_pattern_test(SequenceSpec::explicit_values({-1, -2, 0, -4}), 6).ok);
    auto r = sign_pattern_test(SequenceSpec::explicit_values({1, 2, -3, 4}), 3);
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(*r.first_failure, 2u);
}

TEST(ZeroPattern, Examples)
{
    auto r = zero_pattern_test(SequenceSpec::explicit_values({1, 0, 5}), 4);
    ASSERT_FALSE(r.ok);
    EXPECT_EQ(*r.first_failure, 2u);
    EXPECT_TRUE(zero_pattern_test(SequenceSpec::explicit_values({0, 0, 3, 4}), 8).ok);
    EXPECT_TRUE(zero_pattern_test(SequenceSpec::falling_factorial(3), 10).ok);
    auto ended = zero_pattern_test(SequenceSpec::explicit_values({1, 2, 3}), 5);
    ASSERT_FALSE(ended.ok);
    EXPECT_EQ(*ended.first_failure, 3u);
}

TEST(NecessaryBattery, KnownMultiplierSequencesPass)
{
    EXPECT_TRUE(necessary_battery(SequenceSpec::linear(1), 10).passed());
    EXPECT_TRUE(necessary_battery(SequenceSpec::falling_factorial(2), 10).passed());
    EXPECT_TRUE(necessary_battery(SequenceSpec::trivial(3, 2, 7), 10).passed());
    EXPECT_TRUE(necessary_battery(SequenceSpec::trivial(0, -1, 4), 10).passed());
}

TEST(ClassifyKnown, Examples)
{
    const LaguerreParams p0(0), p1(1);
    EXPECT_EQ(classify_known(SequenceSpec::geometric(2), p0).verdict, MsVerdict::not_ms);
    EXPECT_EQ(classify_known(SequenceSpec::geometric(1), p0).verdict, MsVerdict::is_ms);
    EXPECT_EQ(classify_known(SequenceSpec::linear(Rational(3, 2)), p1).verdict, MsVerdict::is_ms);
    EXPECT_EQ(classify_known(SequenceSpec::linear(Rational(3, 2)), p0).verdict, MsVerdict::not_ms);
    EXPECT_EQ(classify_known(SequenceSpec::linear(Rational(-1, 2)), p1).verdict, MsVerdict::not_ms);
    EXPECT_EQ(classify_known(SequenceSpec::quadratic(2, 1), p0).verdict, MsVerdict::is_ms);
    EXPECT_EQ(classify_known(SequenceSpec::falling_factorial(4), p1).verdict, MsVerdict::is_ms);

    auto c = classify_known(SequenceSpec::quadratic(-2, 0), p0);
    EXPECT_EQ(c.verdict, MsVerdict::not_ms);
    EXPECT_NE(c.citation.find("a>=-1"), std::string::npos);
    EXPECT_NE(classify_known(SequenceSpec::quadratic(1, 2), p0).citation.find("b<=(a+1)^2/4"), std::string::npos);
    EXPECT_NE(classify_known(SequenceSpec::quadratic(5, 4), p0).citation.find("a<=4"), std::string::npos);
    EXPECT_EQ(classify_known(SequenceSpec::quadratic(0, Rational(1, 8)), p0).verdict, MsVerdict::unknown);
}

TEST(ClassifyKnown, QuadraticAwayFromZeroAlphaUsesOnlyGenericChecks)
{
    // (a, b) = (5, 4) breaks a<=4 at alpha = 0, but that bound is not used elsewhere
    const auto c = classify_known(SequenceSpec::quadratic(5, 4), LaguerreParams(1));
    EXPECT_EQ(c.citation.find("a<=4"), std::string::npos);
}

TEST(ClassifyKnown, IsMsVerdictsPassTheBattery)
{
    std::vector<std::pair<SequenceSpec, LaguerreParams>> cases{
        {SequenceSpec::geometric(1), LaguerreParams(0)},
        {SequenceSpec::linear(0), LaguerreParams(0)},
        {SequenceSpec::linear(1), LaguerreParams(0)},
        {SequenceSpec::linear(Rational(7, 2)), LaguerreParams(3)},
        {SequenceSpec::falling_factorial(1), LaguerreParams(0)},
        {SequenceSpec::falling_factorial(3), LaguerreParams(Rational(1, 2))},
        {SequenceSpec::quadratic(1, 0), LaguerreParams(0)},
        {SequenceSpec::quadratic(3, 2), LaguerreParams(0)},
        {SequenceSpec::trivial(4, 1, -1), LaguerreParams(0)},
        {SequenceSpec::explicit_values({0, 2, 5}), LaguerreParams(0)},
    };
    for (const auto& [spec, params] : cases) {
        ASSERT_EQ(classify_known(spec, params).verdict, MsVerdict::is_ms) << spec.describe();
        EXPECT_TRUE(necessary_battery(spec, 10).passed()) << spec.describe();
    }
}
