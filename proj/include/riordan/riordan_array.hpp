#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

#include "riordan/errors.hpp"
#include "riordan/power_series.hpp"
#include "riordan/triangle.hpp"

namespace riordan {

/// A Riordan array (g(x), f(x)) with t(n,k) = [x^n] g(x) f(x)^k.
struct RiordanPair {
    PowerSeries g;
    PowerSeries f;

    std::size_t order() const noexcept { return g.order(); }
};

/// Validates g(0) != 0, f(0) = 0, f'(0) != 0 and truncates both to a common order.
inline RiordanPair make_riordan_pair(const PowerSeries& g, const PowerSeries& f) {
    const std::size_t n = std::min(g.order(), f.order());
    if (n < 2) throw InvalidPair("order must be at least 2");
    if (sgn(g[0]) == 0) throw InvalidPair("g(0) = 0");
    if (sgn(f[0]) != 0) throw InvalidPair("f(0) != 0");
    if (sgn(f[1]) == 0) throw InvalidPair("f'(0) = 0");
    return RiordanPair{g.truncated(n), f.truncated(n)};
}

inline RiordanPair identity_pair(std::size_t order) {
    return make_riordan_pair(PowerSeries::one(order), PowerSeries::x(order));
}

/// Pascal's triangle (1/(1-x), x/(1-x)).
inline RiordanPair pascal_pair(std::size_t order) {
    return make_riordan_pair(rational_function({1}, {1, -1}, order), rational_function({0, 1}, {1, -1}, order));
}

/// Exact agreement of both components to the common truncation.
inline bool same_array(const RiordanPair& a, const RiordanPair& b) { return agree(a.g, b.g) && agree(a.f, b.f); }

/// (g/g0, f): the representative with unit constant term.
inline RiordanPair normalized(const RiordanPair& r) {
    PowerSeries g = r.g;
    g *= Rational(1 / r.g[0]);
    return RiordanPair{std::move(g), r.f};
}

inline LowerTriangle riordan_triangle(const RiordanPair& r, std::size_t nrows) {
    if (nrows > r.order())
        throw InsufficientOrder("cannot realize " + std::to_string(nrows) + " rows from series of order " +
                                std::to_string(r.order()));
    LowerTriangle t(nrows);
    PowerSeries column = r.g.truncated(std::max<std::size_t>(nrows, 1));
    const PowerSeries f = r.f.truncated(column.order());
    for (std::size_t k = 0; k < nrows; ++k) {
        if (k > 0) column = column * f;
        for (std::size_t n = k; n < nrows; ++n) t(n, k) = column[n];
    }
    return t;
}

/// (g, f) * (u, v) = (g u(f), v(f)).
inline RiordanPair riordan_mul(const RiordanPair& lhs, const RiordanPair& rhs) {
    return make_riordan_pair(lhs.g * ps_compose(rhs.g, lhs.f), ps_compose(rhs.f, lhs.f));
}

/// (g, f)^-1 = (1/g(fbar), fbar).
inline RiordanPair riordan_inverse(const RiordanPair& r) {
    const PowerSeries fbar = ps_reversion(r.f);
    return make_riordan_pair(reciprocal(ps_compose(r.g, fbar)), fbar);
}

/// The Bell matrix (f/x, f). Its order is one less than that of f.
inline RiordanPair bell_from_f(const PowerSeries& f) {
    if (f.order() < 3) throw InsufficientOrder("f must carry at least 3 coefficients");
    if (sgn(f[0]) != 0) throw InvalidPair("f(0) != 0");
    const PowerSeries g = f.divided_by_x();
    return make_riordan_pair(g, f.truncated(g.order()));
}

struct ProductionData {
    Sequence z;
    Sequence a;
    DenseMatrix matrix;
};

/**
 * Production matrix P = M^-1 Mbar of the leading size x size block, where
 * Mbar is M with its first row removed. M is lower triangular, so the block
 * only depends on the first size + 1 rows of M and is exact.
 */
inline ProductionData production_matrix(const RiordanPair& r, std::size_t size) {
    if (size < 2) throw Error("production matrix size must be at least 2");
    if (size + 1 > r.order())
        throw InsufficientOrder("production matrix of size " + std::to_string(size) + " needs order " +
                                std::to_string(size + 1));
    const LowerTriangle m = riordan_triangle(r, size + 1);
    DenseMatrix p = DenseMatrix::zero(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        for (std::size_t i = 0; i < size; ++i) {
            Rational acc = m.at(static_cast<long>(i + 1), static_cast<long>(j));
            for (std::size_t k = 0; k < i; ++k)
                if (sgn(p(k, j)) != 0) acc -= m(i, k) * p(k, j);
            p(i, j) = acc / m(i, i);
        }
    }
    ProductionData out;
    out.matrix = p;
    for (std::size_t n = 0; n < size; ++n) {
        out.z.terms.push_back(p(n, 0));
        out.a.terms.push_back(p(n, 1));
    }
    for (std::size_t n = 0; n < size; ++n) {
        for (std::size_t k = 1; k < size; ++k) {
            const long idx = static_cast<long>(n) - static_cast<long>(k) + 1;
            const Rational expected = idx < 0 ? Rational(0) : out.a.terms[static_cast<std::size_t>(idx)];
            if (p(n, k) != expected)
                throw NotRiordanBand("entry (" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                     to_string(p(n, k)) + ", expected " + to_string(expected));
        }
    }
    return out;
}

/// Coefficients of A(x) = x / fbar(x); one fewer term than the pair's order.
inline Sequence a_sequence(const RiordanPair& r) {
    return to_sequence(reciprocal(ps_reversion(r.f).divided_by_x()));
}

/// Z(x) = (1 - g0/g(fbar(x))) / fbar(x), the closed form of the Z-sequence.
inline PowerSeries z_series_closed_form(const RiordanPair& r) {
    const PowerSeries fbar = ps_reversion(r.f);
    const PowerSeries numerator = 1 - r.g[0] * reciprocal(ps_compose(r.g, fbar));
    return numerator.divided_by_x() / fbar.divided_by_x();
}

/// Column 0 of the production matrix, checked against the closed form.
inline Sequence z_sequence(const RiordanPair& r) {
    const Sequence from_matrix = production_matrix(r, r.order() - 1).z;
    const Sequence closed = to_sequence(z_series_closed_form(r));
    const std::size_t n = std::min(from_matrix.size(), closed.size());
    for (std::size_t i = 0; i < n; ++i)
        if (from_matrix[i] != closed[i])
            throw Inconsistency("z_" + std::to_string(i) + ": production matrix gives " + to_string(from_matrix[i]) +
                                ", closed form gives " + to_string(closed[i]));
    return from_matrix;
}

/// The pair with production data (A, Z), normalized to g(0) = 1:
/// (g, f) = ((A - x Z)/A, x/A)^-1.
inline RiordanPair reconstruct_from_AZ(const PowerSeries& a, const PowerSeries& z) {
    if (sgn(a[0]) == 0) throw InvalidPair("A(0) = 0");
    const std::size_t n = std::min(a.order(), z.order());
    const PowerSeries at = a.truncated(n);
    const PowerSeries inv_a = reciprocal(at);
    const PowerSeries d = (at - z.truncated(n).times_x()) * inv_a;
    return riordan_inverse(make_riordan_pair(d, inv_a.times_x()));
}

/// s(x) -> s(x^2) undone: the even-index coefficients of a series whose odd ones vanish.
inline PowerSeries deaerate(const PowerSeries& s) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (i % 2 == 0)
            out.push_back(s[i]);
        else if (sgn(s[i]) != 0)
            throw Error("series is not aerated: coefficient " + std::to_string(i) + " is nonzero");
    }
    return PowerSeries(std::move(out));
}

/// g(sign * x^2), exactly, to order 2 * order(g).
inline PowerSeries aerate(const PowerSeries& g, int sign = 1) {
    std::vector<Rational> c(2 * g.order());
    for (std::size_t i = 0; i < g.order(); ++i) c[2 * i] = (sign < 0 && i % 2 == 1) ? Rational(-g[i]) : g[i];
    return PowerSeries(std::move(c));
}

/// Whether (g(x^2), x g(x^2))^-1 = (g(-x^2), x g(-x^2)) to truncation.
inline bool quasi_involution_check(const PowerSeries& g) {
    if (sgn(g[0]) == 0) throw InvalidPair("g(0) = 0");
    const PowerSeries plus = aerate(g, 1);
    const PowerSeries minus = aerate(g, -1);
    const RiordanPair r = make_riordan_pair(plus, plus.times_x());
    const RiordanPair expected = make_riordan_pair(minus, minus.times_x());
    return same_array(riordan_inverse(r), expected);
}

/// d_n = sum_k t(n-k, k).
inline Sequence diagonal_sums(const LowerTriangle& t) {
    Sequence out;
    for (std::size_t n = 0; n < t.nrows(); ++n) {
        Rational acc;
        for (std::size_t k = 0; 2 * k <= n; ++k) acc += t(n - k, k);
        out.terms.push_back(acc);
    }
    return out;
}

}  // namespace riordan
