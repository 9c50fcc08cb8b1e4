#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/power_series.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

/**
 * An A-matrix (a_{i,j}) together with a rho sequence. The Bell matrix it
 * describes satisfies
 *
 *   t(n+1,k+1) = sum_{i,j} a_{i,j} t(n-i,k+j) + sum_j rho_j t(n+1,k+j+2),
 *
 * and its f(x) solves
 *
 *   f/x = sum_i x^i R_i(f) + (f^2/x) rho(f),
 *
 * where R_i is the generating polynomial of row i. With repeat_last_row the
 * last listed row stands for itself and every row below it.
 */
struct AMatrixSpec {
    std::vector<std::vector<Rational>> rows;
    bool repeat_last_row = false;
    std::vector<Rational> rho;

    void validate() const {
        if (rows.empty() || rows.front().empty()) throw InvalidSpec("A-matrix has no entries");
        if (sgn(rows.front().front()) == 0) throw InvalidSpec("a_{0,0} must be nonzero");
    }

    const Rational& a00() const { return rows.front().front(); }

    /// Entry a_{i,j}, zero when absent; rows past the end repeat the last one when requested.
    Rational entry(std::size_t i, std::size_t j) const {
        if (i >= rows.size()) {
            if (!repeat_last_row) return 0;
            i = rows.size() - 1;
        }
        return j < rows[i].size() ? rows[i][j] : Rational(0);
    }

    Rational rho_at(std::size_t j) const { return j < rho.size() ? rho[j] : Rational(0); }

    std::size_t width() const {
        std::size_t w = 0;
        for (const auto& r : rows) w = std::max(w, r.size());
        return w;
    }

    friend bool operator==(const AMatrixSpec&, const AMatrixSpec&) = default;
};

/// Convenience constructor from integer rows.
inline AMatrixSpec make_spec(std::initializer_list<std::initializer_list<long>> rows,
                             std::initializer_list<long> rho = {}, bool repeat_last_row = false) {
    AMatrixSpec spec;
    for (const auto& r : rows) {
        spec.rows.emplace_back();
        for (long v : r) spec.rows.back().emplace_back(v);
    }
    for (long v : rho) spec.rho.emplace_back(v);
    spec.repeat_last_row = repeat_last_row;
    return spec;
}

struct SolveReport {
    PowerSeries f;
    std::size_t iterations;
    bool residual_ok;
};

/// x * sum_i x^i R_i(f) + f^2 rho(f): the right side of f = F(f).
inline PowerSeries functional_rhs(const AMatrixSpec& spec, const PowerSeries& f) {
    const std::size_t n = f.order();
    const std::size_t last = spec.rows.size() - 1;
    PowerSeries rows_sum = PowerSeries::zero(n);
    for (std::size_t i = 0; i <= last; ++i) {
        PowerSeries term = evaluate_polynomial(spec.rows[i], f).times_x(i);
        if (i == last && spec.repeat_last_row) term = term / PowerSeries::polynomial({1, -1}, n);
        rows_sum += term;
    }
    PowerSeries rhs = rows_sum.times_x();
    if (!spec.rho.empty()) rhs += f * f * evaluate_polynomial(spec.rho, f);
    return rhs;
}

/// f - F(f); identically zero for the solution.
inline PowerSeries functional_residual(const AMatrixSpec& spec, const PowerSeries& f) {
    return f - functional_rhs(spec, f);
}

/**
 * Solves the functional equation by x-adic fixed-point iteration from
 * f = a_{0,0} x. Coefficient n of F(f) only depends on coefficients of f
 * below n, so each pass fixes at least one more coefficient.
 */
inline SolveReport solve_f(const AMatrixSpec& spec, std::size_t order = kDefaultOrder) {
    spec.validate();
    if (order < 2) throw InsufficientOrder("order must be at least 2");
    PowerSeries f = PowerSeries::monomial(1, order, spec.a00());
    for (std::size_t iter = 1; iter <= order + 1; ++iter) {
        PowerSeries next = functional_rhs(spec, f);
        if (next == f) return SolveReport{std::move(f), iter, functional_residual(spec, next).is_zero()};
        f = std::move(next);
    }
    throw NonConvergence("no fixed point after " + std::to_string(order + 1) + " iterations");
}

/// The Bell matrix (f/x, f) of the spec.
inline RiordanPair bell_from_spec(const AMatrixSpec& spec, std::size_t order = kDefaultOrder) {
    return bell_from_f(solve_f(spec, order).f);
}

/**
 * Builds the Bell triangle straight from the recurrence, with t(0,0) = 1.
 *
 * The recurrence is run on the array T(m,K) = [x^m] f^K (T(0,0) = 1 and
 * T(m,0) = 0 otherwise), for which it holds at every m >= 1, K >= 1, and the
 * result is read off as t(n,k) = T(n+1,k+1) / a_{0,0}. This reproduces the
 * seed t(1,0) = a_{0,1} + a_{1,0} + rho_0 when a_{0,0} = 1, and picks up the
 * a_{n,0} contributions of T's first row when the A-matrix is deeper than n.
 * Each row runs right to left since rho terms read the same row.
 */
inline LowerTriangle direct_triangle(const AMatrixSpec& spec, std::size_t nrows) {
    spec.validate();
    if (nrows < 2) throw Error("direct_triangle needs at least 2 rows");
    const std::size_t m_max = nrows;
    const std::size_t depth = spec.repeat_last_row ? m_max : spec.rows.size();
    const std::size_t width = spec.width();
    std::vector<std::vector<Rational>> big(m_max + 1);
    big[0] = {Rational(1)};
    auto at = [&](long m, long k) -> Rational {
        if (m < 0 || k < 0 || k > m) return 0;
        return big[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
    };
    for (std::size_t m = 1; m <= m_max; ++m) {
        big[m].assign(m + 1, Rational(0));
        for (std::size_t kk = m; kk >= 1; --kk) {
            Rational acc;
            for (std::size_t i = 0; i < depth && i + 1 <= m; ++i) {
                for (std::size_t j = 0; j < width; ++j) {
                    const Rational a = spec.entry(i, j);
                    if (sgn(a) == 0) continue;
                    acc += a * at(static_cast<long>(m - 1 - i), static_cast<long>(kk - 1 + j));
                }
            }
            for (std::size_t j = 0; j < spec.rho.size(); ++j) {
                if (sgn(spec.rho[j]) == 0) continue;
                acc += spec.rho[j] * at(static_cast<long>(m), static_cast<long>(kk + 1 + j));
            }
            big[m][kk] = acc;
        }
    }
    LowerTriangle t(nrows);
    const Rational inv = 1 / spec.a00();
    for (std::size_t n = 0; n < nrows; ++n)
        for (std::size_t k = 0; k <= n; ++k) t(n, k) = big[n + 1][k + 1] * inv;
    return t;
}

/// Direct triangle, cross-checked against the series construction.
inline LowerTriangle checked_direct_triangle(const AMatrixSpec& spec, std::size_t nrows) {
    LowerTriangle direct = direct_triangle(spec, nrows);
    const LowerTriangle series = riordan_triangle(normalized(bell_from_spec(spec, nrows + 1)), nrows);
    for (std::size_t n = 0; n < nrows; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            if (direct(n, k) != series(n, k))
                throw Inconsistency("recurrence and series disagree at (" + std::to_string(n) + "," +
                                    std::to_string(k) + "): " + to_string(direct(n, k)) + " vs " +
                                    to_string(series(n, k)));
    return direct;
}

/// Checks the unshifted recurrence on every entry t(n+1,k+1) of t whose inputs were computed.
inline bool amatrix_recurrence_holds(const AMatrixSpec& spec, const LowerTriangle& t) {
    const std::size_t width = spec.width();
    for (std::size_t n = 0; n + 1 < t.nrows(); ++n) {
        const std::size_t depth = spec.repeat_last_row ? n + 1 : std::min(spec.rows.size(), n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            Rational rhs;
            for (std::size_t i = 0; i < depth; ++i)
                for (std::size_t j = 0; j < width; ++j)
                    rhs += spec.entry(i, j) * t.at(static_cast<long>(n - i), static_cast<long>(k + j));
            for (std::size_t j = 0; j < spec.rho.size(); ++j)
                rhs += spec.rho[j] * t.at(static_cast<long>(n + 1), static_cast<long>(k + j + 2));
            if (rhs != t(n + 1, k + 1)) return false;
        }
    }
    return true;
}

/// The six-term recurrence of the Bell matrix of [[1,a,b],[1,c,d]] with rho = 0,
/// including column 0 and the seeds t(0,0) = 1, t(1,0) = a + 1.
inline bool two_row_recurrence_holds(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                     const LowerTriangle& t) {
    if (t.nrows() < 2) return true;
    if (t(0, 0) != 1 || t(1, 0) != a + 1) return false;
    for (long n = 2; n < static_cast<long>(t.nrows()); ++n) {
        for (long k = 0; k <= n; ++k) {
            const Rational rhs = t.at(n - 1, k - 1) + a * t.at(n - 1, k) + b * t.at(n - 1, k + 1) +
                                 t.at(n - 2, k - 1) + c * t.at(n - 2, k) + d * t.at(n - 2, k + 1);
            if (rhs != t.at(n, k)) return false;
        }
    }
    return true;
}

/**
 * f for the A-matrix [[1,a,b],[1,c,d]] with rho = rho0 * 0^n, from
 *
 *   f/x = (1+x)/(1-ax-cx^2) c( x(1+x)(rho0 + bx + dx^2) / (1-ax-cx^2)^2 ).
 *
 * Returned with the requested order (f(0) = 0).
 */
inline PowerSeries closed_form_f_general(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                         const Rational& rho0, std::size_t order = kDefaultOrder) {
    if (order < 2) throw InsufficientOrder("order must be at least 2");
    const std::size_t n = order - 1;
    const PowerSeries one_plus_x = PowerSeries::polynomial({1, 1}, n);
    const std::vector<Rational> den_c{1, -a, -c};
    const std::vector<Rational> q_c{rho0, b, d};
    const PowerSeries den = PowerSeries::polynomial(den_c, n);
    const PowerSeries inner = (one_plus_x * PowerSeries::polynomial(q_c, n)).times_x() / (den * den);
    const PowerSeries f_over_x = one_plus_x / den * ps_compose(catalan_c(n), inner);
    std::vector<Rational> coeffs{Rational(0)};
    coeffs.insert(coeffs.end(), f_over_x.coeffs().begin(), f_over_x.coeffs().end());
    return PowerSeries(std::move(coeffs));
}

/// The A-matrix [[1,a,b],[1,c,d]] with rho = (rho0).
inline AMatrixSpec two_row_spec(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                const Rational& rho0) {
    AMatrixSpec spec;
    spec.rows = {{1, a, b}, {1, c, d}};
    if (sgn(rho0) != 0) spec.rho = {rho0};
    return spec;
}

/**
 * u for A = (1, a, b), rho = c 0^n:
 *   u = x/(1-ax) c( x(bx+c)/(1-ax)^2 ),
 * verified against u = Rev( x(1-cx)/(1+ax+bx^2) ).
 */
inline PowerSeries perturbed_f(const Rational& a, const Rational& b, const Rational& c,
                               std::size_t order = kDefaultOrder) {
    if (order < 2) throw InsufficientOrder("order must be at least 2");
    const std::vector<Rational> lin{1, -a};
    const std::vector<Rational> bc{c, b};
    const PowerSeries one_minus_ax = PowerSeries::polynomial(lin, order);
    const PowerSeries inner = PowerSeries::polynomial(bc, order).times_x() / (one_minus_ax * one_minus_ax);
    const PowerSeries u = PowerSeries::x(order) / one_minus_ax * ps_compose(catalan_c(order), inner);

    const std::vector<Rational> num{0, 1, -c};
    const std::vector<Rational> den{1, a, b};
    const PowerSeries rev = ps_reversion(rational_function(num, den, order));
    if (u != rev) throw Inconsistency("Catalan and reversion forms of the perturbed f disagree");
    return u;
}

/**
 * A-sequence x / fbar(x) of the Bell matrix of the spec, together with a check
 * of the equation obtained by substituting fbar for x in the functional
 * equation: with v = x/fbar,
 *
 *   v = sum_i fbar^i R_i(x) + x v rho(x).
 */
inline Sequence asequence_by_substitution(const AMatrixSpec& spec, std::size_t order = kDefaultOrder) {
    const PowerSeries f = solve_f(spec, order).f;
    const PowerSeries fbar_full = ps_reversion(f);
    const PowerSeries v = reciprocal(fbar_full.divided_by_x());
    const std::size_t n = v.order();
    const PowerSeries fbar = fbar_full.truncated(n);
    const PowerSeries xs = PowerSeries::x(n);

    PowerSeries rhs = PowerSeries::zero(n);
    PowerSeries fbar_power = PowerSeries::one(n);
    const std::size_t last = spec.rows.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) {
        PowerSeries term = fbar_power * evaluate_polynomial(spec.rows[i], xs);
        if (i == last && spec.repeat_last_row) term = term / (1 - fbar);
        rhs += term;
        fbar_power = fbar_power * fbar;
    }
    if (!spec.rho.empty()) rhs += (v * evaluate_polynomial(spec.rho, xs)).times_x();
    if (!(v - rhs).is_zero()) throw Inconsistency("A(x) does not satisfy the substituted equation");
    return to_sequence(v);
}

/// Coefficient array of P_n(r) = sum_k binom(2n-k, k-1+0^k) binom(2n-k+1, n-k) r^k / (k + (2n+1) 0^k),
/// with 0^0 = 1.
inline LowerTriangle narayana_poly_coeffs(std::size_t nrows) {
    LowerTriangle t(nrows);
    for (long n = 0; n < static_cast<long>(nrows); ++n) {
        for (long k = 0; k <= n; ++k) {
            const long zk = k == 0 ? 1 : 0;
            const Integer num = binomial(2 * n - k, k - 1 + zk) * binomial(2 * n - k + 1, n - k);
            t(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) = make_rational(num, k + (2 * n + 1) * zk);
        }
    }
    return t;
}

/**
 * With u = perturbed_f(a,b,c) and v/x the binomial transform of u/x
 * (so v = u(x/(1-x))), checks v/x = (1 + a v + b v^2)/(1-x) + c v^2/x.
 */
inline bool binomial_transform_equation_check(const Rational& a, const Rational& b, const Rational& c,
                                              std::size_t order = kDefaultOrder) {
    const PowerSeries u = perturbed_f(a, b, c, order);
    const PowerSeries x_over = rational_function({0, 1}, {1, -1}, order);
    const PowerSeries v = ps_compose(u, x_over);
    const PowerSeries rhs = x_over * (1 + a * v + b * v * v) + c * v * v;
    return (v - rhs).is_zero();
}

/// Coefficients of P_n(x) = (x - a) P_{n-1}(x) - b P_{n-2}(x), P_0 = 1, P_1 = x - a.
inline LowerTriangle orthogonal_poly_coeffs(const Rational& a, const Rational& b, std::size_t nrows) {
    LowerTriangle t(nrows);
    for (std::size_t n = 0; n < nrows; ++n) {
        if (n == 0) {
            t(0, 0) = 1;
            continue;
        }
        for (std::size_t k = 0; k <= n; ++k) {
            Rational v = t.at(static_cast<long>(n) - 1, static_cast<long>(k) - 1) -
                         a * t.at(static_cast<long>(n) - 1, static_cast<long>(k));
            if (n >= 2) v -= b * t.at(static_cast<long>(n) - 2, static_cast<long>(k));
            t(n, k) = v;
        }
    }
    return t;
}

}  // namespace riordan
