#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "riordan/amatrix.hpp"
#include "riordan/hankel.hpp"
#include "riordan/somos.hpp"

using namespace riordan;

namespace {

DenseMatrix dense(std::initializer_list<std::initializer_list<long>> rows) {
    DenseMatrix m;
    for (const auto& r : rows) {
        m.rows.emplace_back();
        for (long v : r) m.rows.back().emplace_back(v);
    }
    return m;
}

// Laplace expansion along the first row.
Rational cofactor_det(const DenseMatrix& m) {
    const std::size_t n = m.nrows();
    if (n == 1) return m(0, 0);
    Rational det;
    for (std::size_t j = 0; j < n; ++j) {
        DenseMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            minor.rows.emplace_back();
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor.rows.back().push_back(m(i, c));
        }
        const Rational term = m(0, j) * cofactor_det(minor);
        det += j % 2 == 0 ? term : Rational(-term);
    }
    return det;
}

// Sum over permutations with the sign from counting inversions.
Rational leibniz_det(const DenseMatrix& m) {
    const std::size_t n = m.nrows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational det;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Sequence motzkin(std::size_t n) {
    const auto root = ps_sqrt(PowerSeries::polynomial({1, -2, -3}, n + 2));
    auto m = (PowerSeries::polynomial({1, -1}, n + 2) - root).divided_by_x(2);
    m *= make_rational(1, 2);
    return to_sequence(m.truncated(n));
}

}  // namespace

TEST(ExactDet, Examples) {
    EXPECT_EQ(exact_det(dense({{1, 2}, {3, 4}})), -2);
    DenseMatrix id = DenseMatrix::zero(5, 5);
    for (std::size_t i = 0; i < 5; ++i) id(i, i) = 1;
    EXPECT_EQ(exact_det(id), 1);
    EXPECT_EQ(exact_det(dense({{0, 1}, {1, 0}})), -1);
    EXPECT_EQ(exact_det(dense({{1, 2}, {2, 4}})), 0);
    EXPECT_EQ(exact_det(DenseMatrix{}), 1);
}

TEST(ExactDet, HilbertMatrix) {
    DenseMatrix h = DenseMatrix::zero(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) h(i, j) = make_rational(1, static_cast<long>(i + j + 1));
    EXPECT_EQ(cofactor_det(h), make_rational(1, 6048000));
    EXPECT_EQ(exact_det(h), make_rational(1, 6048000));
}

TEST(ExactDet, BareissAgreesWithGaussOnRandomMatrices) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    std::uniform_int_distribution<int> zero_chance(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = size(rng);
        DenseMatrix m = DenseMatrix::zero(n, n);
        std::vector<std::vector<Integer>> z(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const long v = zero_chance(rng) == 0 ? 0 : coeff(rng);
                m(i, j) = v;
                z[i][j] = v;
            }
        const Rational gauss = det_gauss(m);
        EXPECT_EQ(Rational(det_bareiss(z)), gauss) << "trial " << trial;
        if (n <= 6) EXPECT_EQ(leibniz_det(m), gauss) << "trial " << trial;
    }
}

TEST(HankelTransform, ExampleFourColumn) {
    const auto f = solve_f(make_spec({{1, 0, 1}, {1, 1, 0}}), 23).f.divided_by_x();
    EXPECT_EQ(hankel_transform(to_sequence(f), 10),
              make_sequence({1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313}));
}

TEST(HankelTransform, AllOnes) {
    Sequence ones;
    ones.terms.assign(11, Rational(1));
    EXPECT_EQ(hankel_transform(ones, 5), make_sequence({1, 0, 0, 0, 0, 0}));
}

TEST(HankelTransform, CatalanAgainstBruteForce) {
    const auto c = to_sequence(catalan_c(13));
    const auto h = hankel_transform(c, 6);
    EXPECT_EQ(h, make_sequence({1, 1, 1, 1, 1, 1, 1}));
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(leibniz_det(hankel_matrix(c, n)), h[n]);
}

TEST(HankelTransform, WindowingAndErrors) {
    const auto c = to_sequence(catalan_c(20));
    const auto short_c = to_sequence(catalan_c(9));
    EXPECT_EQ(hankel_transform(c, 4), hankel_transform(short_c, 4));
    EXPECT_THROW(hankel_transform(short_c, 5), InsufficientTerms);
    EXPECT_EQ(max_hankel_index(9), 4u);
}

TEST(SomosFit, Examples) {
    const auto a = somos_fit(make_sequence({1, 1, -2, -1, 3, -5, -7, -4, 23, 29, -59}));
    EXPECT_EQ(a.kind, SomosFitKind::Unique);
    EXPECT_EQ(a.alpha, 1);
    EXPECT_EQ(a.beta, 1);
    EXPECT_EQ(a.describe(), "Unique alpha=1 beta=1");

    const auto b = somos_fit(make_sequence({1, 4, 28, 304, 14272, 676864}));
    EXPECT_EQ(b.kind, SomosFitKind::Unique);
    EXPECT_EQ(b.alpha, 4);
    EXPECT_EQ(b.beta, 12);

    const auto ones = somos_fit(make_sequence({1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(ones.kind, SomosFitKind::Family);
    EXPECT_EQ(ones.line_p, 1);
    EXPECT_EQ(ones.line_q, 1);
    EXPECT_EQ(ones.line_r, 1);
}

TEST(SomosFit, DegenerateCases) {
    EXPECT_EQ(somos_fit(make_sequence({1, 2, 3, 4, 5})).kind, SomosFitKind::InsufficientData);
    EXPECT_EQ(somos_fit(make_sequence({0, 0, 0, 0, 0, 0, 0})).kind, SomosFitKind::InsufficientData);
    const auto bad = somos_fit(make_sequence({1, 1, 2, 3, 7, 23, 59, 314, 1529, 8210}));
    EXPECT_EQ(bad.kind, SomosFitKind::Inconsistent);
    EXPECT_EQ(bad.failing_index, 9);
    const auto shifted = somos_fit(make_sequence({1, 1, 2, 3, 7, 23, 59, 315}, 1));
    EXPECT_EQ(shifted.kind, SomosFitKind::Inconsistent);
    EXPECT_EQ(shifted.failing_index, 8);
}

TEST(SomosFit, UniqueImpliesVerify) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational alpha = coeff(rng), beta = coeff(rng);
        std::vector<Rational> s{1, 1, Rational(coeff(rng)), 1};
        if (sgn(s[2]) == 0) s[2] = 2;
        for (std::size_t n = 4; n < 12 && sgn(s[n - 4]) != 0; ++n)
            s.push_back((alpha * s[n - 1] * s[n - 3] + beta * s[n - 2] * s[n - 2]) / s[n - 4]);
        if (s.size() < 6) continue;
        const Sequence seq{s};
        const auto fit = somos_fit(seq);
        if (fit.kind == SomosFitKind::Unique) {
            EXPECT_TRUE(somos_verify(seq, fit.alpha, fit.beta));
            EXPECT_EQ(fit.alpha, alpha);
            EXPECT_EQ(fit.beta, beta);
        }
        EXPECT_TRUE(somos_verify(seq, alpha, beta));
    }
}

TEST(SomosVerify, Examples) {
    EXPECT_TRUE(somos_verify(make_sequence({1, 0, -4, -16, -64, 0, 4096, 65536, 1048576, 0, -1073741824}), 4, -4));
    EXPECT_TRUE(somos_verify(make_sequence({1, 1, 2, 3, 7, 23, 59, 314, 1529}), 1, 1));
    EXPECT_FALSE(somos_verify(make_sequence({1, 1, 2, 3, 7}), 0, 0));
    EXPECT_EQ(somos_first_failure(make_sequence({1, 1, 2, 3, 7}), 0, 0), 4);
    EXPECT_THROW(somos_verify(make_sequence({1, 1, 2, 3}), 1, 1), InsufficientTerms);
}

TEST(JFraction, DisplayedExample) {
    const auto jf = jfraction(make_sequence({1, 2, 3, 6, 13, 29, 66}), 3);
    EXPECT_EQ(jf.b, (std::vector<Rational>{2, -2, make_rational(11, 4)}));
    EXPECT_EQ(jf.lambda, (std::vector<Rational>{-1, -4, make_rational(3, 16)}));
    EXPECT_FALSE(jf.terminated);
    // one more partial denominator needs two more terms of the column
    const auto column = solve_f(make_spec({{1, 1, 0}, {1, 1, 1}}), 12).f.divided_by_x();
    EXPECT_EQ(to_sequence(column.truncated(7)), make_sequence({1, 2, 3, 6, 13, 29, 66}));
    const auto deeper = jfraction(to_sequence(column), 4);
    EXPECT_EQ(deeper.b[3], make_rational(43, 12));
}

TEST(JFraction, Geometric) {
    const auto jf = jfraction(to_sequence(rational_function({1}, {1, -1}, 9)), 4);
    EXPECT_TRUE(jf.terminated);
    EXPECT_EQ(jf.b, std::vector<Rational>{1});
    EXPECT_EQ(jf.lambda, std::vector<Rational>{0});
}

TEST(JFraction, MotzkinAgainstHankelRatios) {
    const std::size_t depth = 7;
    const auto m = motzkin(2 * depth + 1);
    EXPECT_EQ(m, make_sequence({1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634}));
    const auto jf = jfraction(m, depth);
    const auto h = hankel_transform(m, depth);
    for (std::size_t n = 1; n <= depth; ++n) {
        const Rational prev2 = n >= 2 ? h[n - 2] : Rational(1);
        EXPECT_EQ(jf.lambda[n - 1], h[n] * prev2 / (h[n - 1] * h[n - 1]));
        EXPECT_EQ(jf.lambda[n - 1], 1);
        EXPECT_EQ(jf.b[n - 1], 1);
    }
}

TEST(JFraction, ReconstructsAndMatchesHankelOnRandomSequences) {
    std::mt19937 rng(10);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<long> lead(1, 3);
    const std::size_t depth = 5;
    int checked = 0;
    for (int trial = 0; trial < 10; ++trial) {
        Sequence s;
        s.terms.emplace_back(lead(rng));
        for (std::size_t i = 1; i < 2 * depth + 1; ++i) s.terms.emplace_back(coeff(rng));
        const auto jf = jfraction(s, depth);
        const auto h = hankel_transform(s, depth);
        if (jf.terminated) continue;
        ++checked;
        EXPECT_EQ(to_sequence(jfraction_series(jf, 2 * depth + 1)), s);
        for (std::size_t n = 0; n <= depth; ++n) {
            Rational prod = 1;
            for (std::size_t k = 0; k <= n; ++k) prod *= s[0];
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t e = 0; e < n + 1 - i; ++e) prod *= jf.lambda[i - 1];
            EXPECT_EQ(h[n], prod) << "trial " << trial << " n=" << n;
        }
    }
    EXPECT_GE(checked, 8);
}

TEST(JFraction, Errors) {
    EXPECT_THROW(jfraction(make_sequence({1, 2, 3}), 2), InsufficientTerms);
    EXPECT_THROW(jfraction(make_sequence({0, 1, 2}), 1), DivisionByNonUnit);
}
