#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "riordan/errors.hpp"
#include "riordan/power_series.hpp"

namespace riordan {

/// One window s_n s_{n-4} = alpha s_{n-1} s_{n-3} + beta s_{n-2}^2, as p alpha + q beta = r.
struct SomosWindow {
    long index;  // n, including the sequence offset
    Rational p, q, r;

    bool trivial() const { return sgn(p) == 0 && sgn(q) == 0 && sgn(r) == 0; }
};

inline std::vector<SomosWindow> somos_windows(const Sequence& s) {
    std::vector<SomosWindow> out;
    for (std::size_t n = 4; n < s.size(); ++n)
        out.push_back(SomosWindow{s.offset + static_cast<long>(n), s[n - 1] * s[n - 3], s[n - 2] * s[n - 2],
                                  s[n] * s[n - 4]});
    return out;
}

/// Windows that constrain (alpha, beta) at all.
inline std::size_t usable_somos_windows(const Sequence& s) {
    std::size_t count = 0;
    for (const auto& w : somos_windows(s))
        if (!w.trivial()) ++count;
    return count;
}

enum class SomosFitKind { Unique, Family, Inconsistent, InsufficientData };

inline const char* to_string(SomosFitKind kind) {
    switch (kind) {
        case SomosFitKind::Unique: return "Unique";
        case SomosFitKind::Family: return "Family";
        case SomosFitKind::Inconsistent: return "Inconsistent";
        case SomosFitKind::InsufficientData: return "InsufficientData";
    }
    return "?";
}

struct SomosFitResult {
    SomosFitKind kind = SomosFitKind::InsufficientData;
    Rational alpha, beta;  // Unique
    // Family: the line p alpha + q beta = r, scaled so the first nonzero of (p, q) is 1.
    Rational line_p, line_q, line_r;
    long failing_index = -1;  // Inconsistent: first window that contradicts the earlier ones
    std::size_t windows_used = 0;

    std::string describe() const {
        switch (kind) {
            case SomosFitKind::Unique: return "Unique alpha=" + riordan::to_string(alpha) + " beta=" + riordan::to_string(beta);
            case SomosFitKind::Family:
                return "Family " + riordan::to_string(line_p) + "*alpha + " + riordan::to_string(line_q) +
                       "*beta = " + riordan::to_string(line_r);
            case SomosFitKind::Inconsistent: return "Inconsistent at n=" + std::to_string(failing_index);
            case SomosFitKind::InsufficientData: return "InsufficientData";
        }
        return "?";
    }
};

/**
 * Fits (alpha, beta) to every window of s. Windows are added in order; the
 * solution set shrinks from the whole plane to a line to a point, and the
 * first window that empties it is reported as the failing index. Windows
 * whose three products all vanish are skipped.
 */
inline SomosFitResult somos_fit(const Sequence& h) {
    SomosFitResult res;
    if (h.size() < 6) return res;
    enum class State { Plane, Line, Point } state = State::Plane;
    Rational lp, lq, lr;
    for (const auto& w : somos_windows(h)) {
        if (w.trivial()) continue;
        ++res.windows_used;
        auto fail = [&] {
            res.kind = SomosFitKind::Inconsistent;
            res.failing_index = w.index;
            return res;
        };
        if (sgn(w.p) == 0 && sgn(w.q) == 0) return fail();
        switch (state) {
            case State::Plane: {
                const Rational lead = sgn(w.p) != 0 ? w.p : w.q;
                lp = w.p / lead;
                lq = w.q / lead;
                lr = w.r / lead;
                state = State::Line;
                break;
            }
            case State::Line: {
                const Rational det = lp * w.q - lq * w.p;
                if (sgn(det) != 0) {
                    res.alpha = (lr * w.q - lq * w.r) / det;
                    res.beta = (lp * w.r - lr * w.p) / det;
                    state = State::Point;
                } else {
                    // parallel: same line iff the right sides scale alike
                    const Rational lead = sgn(w.p) != 0 ? w.p : w.q;
                    if (w.r / lead != lr) return fail();
                }
                break;
            }
            case State::Point:
                if (w.p * res.alpha + w.q * res.beta != w.r) return fail();
                break;
        }
    }
    switch (state) {
        case State::Plane: res.kind = SomosFitKind::InsufficientData; break;
        case State::Line:
            res.kind = SomosFitKind::Family;
            res.line_p = lp;
            res.line_q = lq;
            res.line_r = lr;
            break;
        case State::Point: res.kind = SomosFitKind::Unique; break;
    }
    return res;
}

/// First index n >= 4 where s_n s_{n-4} != alpha s_{n-1} s_{n-3} + beta s_{n-2}^2.
inline std::optional<long> somos_first_failure(const Sequence& s, const Rational& alpha, const Rational& beta) {
    if (s.size() < 5) throw InsufficientTerms("Somos-4 check needs at least 5 terms");
    for (const auto& w : somos_windows(s))
        if (alpha * w.p + beta * w.q != w.r) return w.index;
    return std::nullopt;
}

/// Product form, so zero terms are allowed.
inline bool somos_verify(const Sequence& s, const Rational& alpha, const Rational& beta) {
    return !somos_first_failure(s, alpha, beta).has_value();
}

}  // namespace riordan
