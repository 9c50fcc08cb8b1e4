#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/power_series.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

/// Fraction-free (Bareiss) determinant of an integer matrix.
inline Integer det_bareiss(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Determinant by Gaussian elimination over the rationals.
inline Rational det_gauss(DenseMatrix m) {
    const std::size_t n = m.nrows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m.rows[k], m.rows[pivot]);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(m(i, k)) == 0) continue;
            const Rational factor = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

/// Exact determinant; integer matrices take the fraction-free path.
inline Rational exact_det(const DenseMatrix& m) {
    for (const auto& row : m.rows)
        if (row.size() != m.nrows()) throw Error("determinant of a non-square matrix");
    bool integral = true;
    for (const auto& row : m.rows)
        for (const auto& v : row) integral = integral && is_integer(v);
    if (!integral) return det_gauss(m);
    std::vector<std::vector<Integer>> z(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (const auto& v : m.rows[i]) z[i].push_back(v.get_num());
    return Rational(det_bareiss(std::move(z)));
}

inline DenseMatrix hankel_matrix(const Sequence& s, std::size_t n) {
    DenseMatrix m = DenseMatrix::zero(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) m(i, j) = s[i + j];
    return m;
}

/// h_n = det(s_{i+j})_{0 <= i,j <= n} for n = 0 .. max_n.
inline Sequence hankel_transform(const Sequence& s, std::size_t max_n) {
    if (s.size() < 2 * max_n + 1)
        throw InsufficientTerms("Hankel transform to h_" + std::to_string(max_n) + " needs " +
                                std::to_string(2 * max_n + 1) + " terms, got " + std::to_string(s.size()));
    Sequence h;
    for (std::size_t n = 0; n <= max_n; ++n) h.terms.push_back(exact_det(hankel_matrix(s, n)));
    return h;
}

/// Largest n for which h_n is available from the given number of terms.
inline std::size_t max_hankel_index(std::size_t terms) { return terms == 0 ? 0 : (terms - 1) / 2; }

/**
 * Continued fraction
 *
 *   S(x) = s_0 / (1 - b_0 x - lambda_1 x^2 / (1 - b_1 x - lambda_2 x^2 / (...)))
 *
 * A displayed "+ c x^2" numerator corresponds to lambda = -c.
 */
struct JFraction {
    Rational scale = 1;  // s_0
    std::vector<Rational> b;
    std::vector<Rational> lambda;  // lambda[0] is lambda_1
    bool terminated = false;
};

/// Extracts b_0..b_{depth-1} and lambda_1..lambda_depth by repeated series
/// inversion; stops early when some lambda vanishes.
inline JFraction jfraction(const Sequence& s, std::size_t depth) {
    if (s.size() < 2 * depth + 1)
        throw InsufficientTerms("J-fraction of depth " + std::to_string(depth) + " needs " +
                                std::to_string(2 * depth + 1) + " terms");
    if (sgn(s[0]) == 0) throw DivisionByNonUnit("s_0 = 0");
    JFraction out;
    out.scale = s[0];
    PowerSeries tail = PowerSeries(s.terms);
    tail *= Rational(1 / s[0]);
    for (std::size_t k = 0; k < depth; ++k) {
        const PowerSeries inv = reciprocal(tail);
        const Rational bk = -inv[1];
        const Rational lam = -inv[2];
        out.b.push_back(bk);
        out.lambda.push_back(lam);
        if (sgn(lam) == 0) {
            out.terminated = true;
            break;
        }
        if (k + 1 == depth) break;
        // 1 - b x - 1/T = lambda x^2 T_next
        PowerSeries rest = 1 - PowerSeries::monomial(1, inv.order(), bk) - inv;
        tail = rest.divided_by_x(2);
        tail *= Rational(1 / lam);
    }
    return out;
}

/// Expands a J-fraction back into a series, treating the unknown tail as 1.
inline PowerSeries jfraction_series(const JFraction& jf, std::size_t order) {
    PowerSeries tail = PowerSeries::one(order);
    for (std::size_t k = jf.b.size(); k-- > 0;) {
        const Rational lam = k < jf.lambda.size() ? jf.lambda[k] : Rational(0);
        PowerSeries den = 1 - PowerSeries::monomial(1, order, jf.b[k]) - (tail * lam).times_x(2);
        tail = reciprocal(den);
    }
    return tail * jf.scale;
}

}  // namespace riordan
