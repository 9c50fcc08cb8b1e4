#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

/// Default number of retained coefficients. Enough for Hankel transforms up
/// to h_15 of an f(x)/x expansion.
inline constexpr std::size_t kDefaultOrder = 32;

/**
 * Truncated formal power series over the rationals.
 *
 * A series of order N holds the coefficients of x^0 .. x^(N-1); everything
 * from x^N on is unknown. Binary operations on series of different orders
 * truncate to the smaller order, so a result never claims more precision
 * than its inputs carry.
 */
class PowerSeries {
public:
    explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw Error("power series order must be positive");
    }

    static PowerSeries zero(std::size_t order) {
        return PowerSeries(std::vector<Rational>(order));
    }

    static PowerSeries constant(const Rational& c, std::size_t order) {
        PowerSeries s = zero(order);
        s.coeffs_[0] = c;
        return s;
    }

    static PowerSeries one(std::size_t order) { return constant(1, order); }

    /// The series x^power (times scale).
    static PowerSeries monomial(std::size_t power, std::size_t order, const Rational& scale = 1) {
        PowerSeries s = zero(order);
        if (power < order) s.coeffs_[power] = scale;
        return s;
    }

    static PowerSeries x(std::size_t order) { return monomial(1, order); }

    /// Polynomial with the given coefficients, padded or truncated to order.
    static PowerSeries polynomial(std::span<const Rational> coeffs, std::size_t order) {
        PowerSeries s = zero(order);
        for (std::size_t i = 0; i < std::min(order, coeffs.size()); ++i) s.coeffs_[i] = coeffs[i];
        return s;
    }

    static PowerSeries polynomial(std::initializer_list<long> coeffs, std::size_t order) {
        std::vector<Rational> c;
        for (long v : coeffs) c.emplace_back(v);
        return polynomial(c, order);
    }

    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    const Rational& at(std::size_t i) const {
        if (i >= coeffs_.size())
            throw InsufficientOrder("coefficient " + std::to_string(i) + " requested from series of order " +
                                    std::to_string(coeffs_.size()));
        return coeffs_[i];
    }

    PowerSeries truncated(std::size_t order) const {
        if (order == 0) throw Error("power series order must be positive");
        std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min(order, coeffs_.size()));
        return PowerSeries(std::move(c));
    }

    /// Divides by x^k. The first k coefficients must vanish; the order drops by k.
    PowerSeries divided_by_x(std::size_t k = 1) const {
        if (k >= coeffs_.size()) throw InsufficientOrder("cannot divide by x^" + std::to_string(k));
        for (std::size_t i = 0; i < k; ++i)
            if (sgn(coeffs_[i]) != 0) throw DivisionByNonUnit("series is not divisible by x^" + std::to_string(k));
        return PowerSeries(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
    }

    /// Multiplies by x^k, keeping the order.
    PowerSeries times_x(std::size_t k = 1) const {
        PowerSeries s = zero(order());
        for (std::size_t i = k; i < order(); ++i) s.coeffs_[i] = coeffs_[i - k];
        return s;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
    }

    PowerSeries operator-() const {
        PowerSeries s = *this;
        for (auto& c : s.coeffs_) c = -c;
        return s;
    }

    PowerSeries& operator+=(const PowerSeries& rhs) {
        coeffs_.resize(std::min(order(), rhs.order()));
        for (std::size_t i = 0; i < order(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }

    PowerSeries& operator-=(const PowerSeries& rhs) {
        coeffs_.resize(std::min(order(), rhs.order()));
        for (std::size_t i = 0; i < order(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }

    PowerSeries& operator*=(const Rational& c) {
        for (auto& v : coeffs_) v *= c;
        return *this;
    }

    friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
    friend PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }
    friend PowerSeries operator*(PowerSeries lhs, const Rational& c) { return lhs *= c; }
    friend PowerSeries operator*(const Rational& c, PowerSeries rhs) { return rhs *= c; }

    friend PowerSeries operator+(PowerSeries lhs, const Rational& c) {
        lhs.coeffs_[0] += c;
        return lhs;
    }
    friend PowerSeries operator-(PowerSeries lhs, const Rational& c) {
        lhs.coeffs_[0] -= c;
        return lhs;
    }
    friend PowerSeries operator+(const Rational& c, PowerSeries rhs) { return rhs + c; }
    friend PowerSeries operator-(const Rational& c, const PowerSeries& rhs) { return -rhs + c; }

    friend PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
        const std::size_t n = std::min(lhs.order(), rhs.order());
        std::vector<Rational> out(n);
        Rational term;
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(lhs.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (sgn(rhs.coeffs_[j]) == 0) continue;
                mpq_mul(term.get_mpq_t(), lhs.coeffs_[i].get_mpq_t(), rhs.coeffs_[j].get_mpq_t());
                out[i + j] += term;
            }
        }
        return PowerSeries(std::move(out));
    }

    friend PowerSeries operator/(const PowerSeries& num, const PowerSeries& den) {
        if (sgn(den.coeffs_[0]) == 0) throw DivisionByNonUnit("divisor has zero constant term");
        const std::size_t n = std::min(num.order(), den.order());
        std::vector<Rational> q(n);
        const Rational inv0 = 1 / den.coeffs_[0];
        for (std::size_t i = 0; i < n; ++i) {
            Rational acc = num.coeffs_[i];
            for (std::size_t k = 0; k < i; ++k)
                if (sgn(q[k]) != 0 && sgn(den.coeffs_[i - k]) != 0) acc -= q[k] * den.coeffs_[i - k];
            q[i] = acc * inv0;
        }
        return PowerSeries(std::move(q));
    }

    PowerSeries& operator*=(const PowerSeries& rhs) { return *this = *this * rhs; }
    PowerSeries& operator/=(const PowerSeries& rhs) { return *this = *this / rhs; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// True when a and b agree on every coefficient both of them carry.
inline bool agree(const PowerSeries& a, const PowerSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

enum class SeriesOp { add, sub, mul, div };

inline PowerSeries ps_arith(const PowerSeries& lhs, const PowerSeries& rhs, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return lhs + rhs;
        case SeriesOp::sub: return lhs - rhs;
        case SeriesOp::mul: return lhs * rhs;
        case SeriesOp::div: return lhs / rhs;
    }
    throw Error("unknown series operation");
}

inline PowerSeries reciprocal(const PowerSeries& s) { return PowerSeries::one(s.order()) / s; }

/// p(s) for a finite coefficient list p; s may have any constant term.
inline PowerSeries evaluate_polynomial(std::span<const Rational> p, const PowerSeries& s) {
    PowerSeries acc = PowerSeries::zero(s.order());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * s;
        acc = acc + p[i];
    }
    return acc;
}

/// outer(inner(x)) by Horner's rule; inner must have zero constant term.
inline PowerSeries ps_compose(const PowerSeries& outer, const PowerSeries& inner) {
    if (sgn(inner[0]) != 0)
        throw CompositionRequiresZeroConstantTerm("inner series has constant term " + to_string(inner[0]));
    const std::size_t n = std::min(outer.order(), inner.order());
    return evaluate_polynomial(std::span<const Rational>(outer.coeffs().data(), n), inner.truncated(n));
}

/**
 * Compositional inverse by Lagrange inversion:
 *   [x^n] rev(f) = (1/n) [x^(n-1)] (x/f(x))^n.
 * The result has the same order as f.
 */
inline PowerSeries ps_reversion(const PowerSeries& f) {
    if (f.order() < 2) throw NotRevertible("series of order < 2 has no linear term");
    if (sgn(f[0]) != 0) throw NotRevertible("f(0) != 0");
    if (sgn(f[1]) == 0) throw NotRevertible("f'(0) == 0");
    const std::size_t n = f.order();
    const PowerSeries h = reciprocal(f.divided_by_x());  // order n - 1
    std::vector<Rational> out(n);
    PowerSeries power = h;
    for (std::size_t k = 1; k < n; ++k) {
        if (k > 1) power = power * h;
        out[k] = power[k - 1] / static_cast<long>(k);
    }
    return PowerSeries(std::move(out));
}

/// The square root with positive constant term.
inline PowerSeries ps_sqrt(const PowerSeries& s) {
    const auto root0 = rational_sqrt(s[0]);
    if (!root0 || sgn(*root0) == 0)
        throw NonSquareConstantTerm("constant term " + to_string(s[0]) + " has no nonzero rational square root");
    const std::size_t n = s.order();
    std::vector<Rational> t(n);
    t[0] = *root0;
    const Rational inv = 1 / (2 * t[0]);
    for (std::size_t i = 1; i < n; ++i) {
        Rational acc = s[i];
        for (std::size_t k = 1; k < i; ++k) acc -= t[k] * t[i - k];
        t[i] = acc * inv;
    }
    return PowerSeries(std::move(t));
}

/// Catalan generating function c(x), the solution of c = 1 + x c^2.
inline PowerSeries catalan_c(std::size_t order) {
    if (order == 0) throw Error("order must be positive");
    std::vector<Rational> c(order);
    c[0] = 1;
    for (std::size_t n = 1; n < order; ++n)
        for (std::size_t i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
    return PowerSeries(std::move(c));
}

/// Expansion of num(x)/den(x) for polynomial coefficient lists.
inline PowerSeries rational_function(std::span<const Rational> num, std::span<const Rational> den,
                                     std::size_t order) {
    return PowerSeries::polynomial(num, order) / PowerSeries::polynomial(den, order);
}

inline PowerSeries rational_function(std::initializer_list<long> num, std::initializer_list<long> den,
                                     std::size_t order) {
    return PowerSeries::polynomial(num, order) / PowerSeries::polynomial(den, order);
}

/// A run of terms s_offset, s_offset+1, ...
struct Sequence {
    std::vector<Rational> terms;
    long offset = 0;

    std::size_t size() const noexcept { return terms.size(); }
    const Rational& operator[](std::size_t i) const { return terms[i]; }
    friend bool operator==(const Sequence&, const Sequence&) = default;
};

inline Sequence to_sequence(const PowerSeries& s) { return Sequence{s.coeffs(), 0}; }

inline Sequence make_sequence(std::initializer_list<long> values, long offset = 0) {
    Sequence s;
    s.offset = offset;
    for (long v : values) s.terms.emplace_back(v);
    return s;
}

/// True when the first min(len) terms agree.
inline bool has_prefix(const Sequence& s, const Sequence& prefix) {
    if (prefix.size() > s.size()) return false;
    return std::equal(prefix.terms.begin(), prefix.terms.end(), s.terms.begin());
}

/// t_n = sum_k C(n,k) s_k.
inline Sequence seq_binomial_transform(const Sequence& s) {
    Sequence out;
    out.offset = s.offset;
    out.terms.resize(s.size());
    for (std::size_t n = 0; n < s.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            out.terms[n] += Rational(binomial(static_cast<long>(n), static_cast<long>(k))) * s.terms[k];
    return out;
}

}  // namespace riordan
