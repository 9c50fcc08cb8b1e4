#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "riordan/power_series.hpp"

using namespace riordan;

namespace {

PowerSeries series(std::initializer_list<long> c) { return PowerSeries::polynomial(c, c.size()); }

PowerSeries random_series(std::mt19937& rng, std::size_t order, bool revertible) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::vector<Rational> c(order);
    for (auto& v : c) v = coeff(rng);
    if (revertible) {
        c[0] = 0;
        while (sgn(c[1]) == 0) c[1] = coeff(rng);
    }
    return PowerSeries(c);
}

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(parse_rational("7"), 7);
    EXPECT_EQ(parse_rational("-3"), -3);
    EXPECT_EQ(parse_rational("6/8"), make_rational(3, 4));
    EXPECT_EQ(parse_rational(" -22/4 "), make_rational(-11, 2));
    EXPECT_EQ(to_string(parse_rational("44/16")), "11/4");
    EXPECT_EQ(to_string(parse_rational("10/5")), "2");
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("abc"), Error);
    EXPECT_THROW(parse_rational("1/-2"), Error);
    EXPECT_THROW(parse_rational(""), Error);
}

TEST(Rational, ZeroIsCanonical) {
    const Rational z = make_rational(0, -5);
    EXPECT_EQ(z.get_num(), 0);
    EXPECT_EQ(z.get_den(), 1);
}

TEST(PowerSeriesArith, GeometricSeriesTimesOneMinusX) {
    const auto geo = rational_function({1}, {1, -1}, 10);
    EXPECT_EQ(ps_arith(series({1, -1}).truncated(2), geo, SeriesOp::mul), PowerSeries::one(2));
    EXPECT_EQ(PowerSeries::polynomial({1, -1}, 10) * geo, PowerSeries::one(10));
}

TEST(PowerSeriesArith, OnePlusXOverOneMinusX) {
    const auto q = ps_arith(PowerSeries::polynomial({1, 1}, 8), PowerSeries::polynomial({1, -1}, 8), SeriesOp::div);
    EXPECT_EQ(q.coeffs(), ints({1, 2, 2, 2, 2, 2, 2, 2}));
}

TEST(PowerSeriesArith, DivisionByNonUnit) {
    EXPECT_THROW(ps_arith(PowerSeries::one(5), PowerSeries::x(5), SeriesOp::div), DivisionByNonUnit);
}

TEST(PowerSeriesArith, MixedOrdersTruncateToMinimum) {
    const auto a = PowerSeries::polynomial({1, 2, 3}, 10);
    const auto b = PowerSeries::polynomial({1, 1}, 4);
    EXPECT_EQ((a + b).order(), 4u);
    EXPECT_EQ((a * b).order(), 4u);
    EXPECT_EQ((a / b).order(), 4u);
    EXPECT_EQ((a - b).order(), 4u);
    EXPECT_EQ((a * b).coeffs(), ints({1, 3, 5, 3}));
}

TEST(PowerSeriesArith, RingAxiomsOnRandomTriples) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 12, false);
        const auto b = random_series(rng, 12, false);
        const auto c = random_series(rng, 12, false);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) - b, a);
        if (sgn(b[0]) != 0) EXPECT_EQ((a / b) * b, a);
    }
}

TEST(Compose, GeometricOfPascalF) {
    // 1/(1 - x/(1-x)) = (1-x)/(1-2x): 1, 1, 2, 4, 8, ...
    const std::size_t n = 12;
    const auto composed = ps_compose(rational_function({1}, {1, -1}, n), rational_function({0, 1}, {1, -1}, n));
    std::vector<Rational> expected(n);
    expected[0] = 1;
    for (std::size_t i = 1; i < n; ++i) expected[i] = Rational(Integer(1) << static_cast<unsigned>(i - 1));
    EXPECT_EQ(composed.coeffs(), expected);
    EXPECT_EQ(composed, rational_function({1, -1}, {1, -2}, n));
}

TEST(Compose, IdentityInner) {
    const auto s = series({3, -1, 4, 1, -5, 9});
    EXPECT_EQ(ps_compose(s, PowerSeries::x(6)), s);
}

TEST(Compose, RejectsNonzeroConstantInner) {
    const auto s = series({3, -1, 4});
    EXPECT_THROW(ps_compose(s, PowerSeries::polynomial({1, 1}, 3)), CompositionRequiresZeroConstantTerm);
}

TEST(Reversion, OfX) { EXPECT_EQ(ps_reversion(PowerSeries::x(10)), PowerSeries::x(10)); }

TEST(Reversion, OfPascalF) {
    EXPECT_EQ(ps_reversion(rational_function({0, 1}, {1, -1}, 12)), rational_function({0, 1}, {1, 1}, 12));
}

TEST(Reversion, HybridBinaryTrees) {
    const auto f = ps_reversion(rational_function({0, 1, -1, -1}, {1, 1}, 10));
    EXPECT_EQ(f.coeffs(), ints({0, 1, 2, 7, 31, 154, 820, 4575, 26398, 156233}));
}

TEST(Reversion, Errors) {
    EXPECT_THROW(ps_reversion(PowerSeries::polynomial({1, 1}, 5)), NotRevertible);
    EXPECT_THROW(ps_reversion(PowerSeries::polynomial({0, 0, 1}, 5)), NotRevertible);
}

TEST(Reversion, RoundTripOnRandomSeries) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t order = 2 + static_cast<std::size_t>(trial % 23);
        const auto f = random_series(rng, order, true);
        const auto fbar = ps_reversion(f);
        EXPECT_EQ(ps_compose(f, fbar), PowerSeries::x(order)) << "order " << order;
        EXPECT_EQ(ps_compose(fbar, f), PowerSeries::x(order)) << "order " << order;
    }
}

TEST(Sqrt, Basics) {
    EXPECT_EQ(ps_sqrt(PowerSeries::one(6)), PowerSeries::one(6));
    EXPECT_EQ(ps_sqrt(PowerSeries::polynomial({1, 2, 1}, 8)), PowerSeries::polynomial({1, 1}, 8));
    EXPECT_EQ(ps_sqrt(PowerSeries::polynomial({4, 4, 1}, 8)), PowerSeries::polynomial({2, 1}, 8));
    EXPECT_EQ(ps_sqrt(PowerSeries::polynomial({1, 0, 0}, 3) * Rational(make_rational(9, 4)))[0],
              make_rational(3, 2));
    EXPECT_THROW(ps_sqrt(PowerSeries::polynomial({2, 1}, 4)), NonSquareConstantTerm);
    EXPECT_THROW(ps_sqrt(PowerSeries::polynomial({0, 1}, 4)), NonSquareConstantTerm);
}

TEST(Sqrt, CatalanFromRadical) {
    // (1 - sqrt(1-4x)) / (2x)
    const auto root = ps_sqrt(PowerSeries::polynomial({1, -4}, 9));
    auto c = (1 - root).divided_by_x();
    c *= make_rational(1, 2);
    EXPECT_EQ(c.coeffs(), ints({1, 1, 2, 5, 14, 42, 132, 429}));
}

TEST(Sqrt, SquaresBackOnRandomSeries) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_series(rng, 16, false);
        s = s - s[0] + 1;
        const auto t = ps_sqrt(s);
        EXPECT_EQ(t * t, s);
        EXPECT_EQ(t[0], 1);
    }
}

TEST(Catalan, FirstTerms) {
    const auto c = catalan_c(6);
    EXPECT_EQ(c.coeffs(), ints({1, 1, 2, 5, 14, 42}));
    EXPECT_EQ(catalan_c(1)[0], 1);
    const auto big = catalan_c(kDefaultOrder);
    EXPECT_TRUE((big - 1 - (big * big).times_x()).is_zero());
}

TEST(BinomialTransform, Examples) {
    EXPECT_EQ(seq_binomial_transform(make_sequence({1, 0, 0, 0, 0})), make_sequence({1, 1, 1, 1, 1}));
    EXPECT_EQ(seq_binomial_transform(make_sequence({1, 7, 87, 1331, 22731})),
              make_sequence({1, 8, 102, 1614, 28606}));
}

TEST(BinomialTransform, AgreesWithPascalMatrix) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (std::size_t len : {8u, 16u}) {
        for (int trial = 0; trial < 10; ++trial) {
            Sequence s;
            for (std::size_t i = 0; i < len; ++i) s.terms.emplace_back(coeff(rng));
            // Pascal rows built by the additive rule, independent of binomial().
            std::vector<std::vector<Integer>> pascal(len, std::vector<Integer>(len));
            for (std::size_t n = 0; n < len; ++n) {
                pascal[n][0] = 1;
                for (std::size_t k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
            }
            Sequence expected;
            for (std::size_t n = 0; n < len; ++n) {
                Rational acc;
                for (std::size_t k = 0; k <= n; ++k) acc += Rational(pascal[n][k]) * s[k];
                expected.terms.push_back(acc);
            }
            EXPECT_EQ(seq_binomial_transform(s), expected);
        }
    }
}
