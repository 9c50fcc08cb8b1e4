#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "riordan/amatrix.hpp"
#include "riordan/errors.hpp"
#include "riordan/hankel.hpp"
#include "riordan/json_io.hpp"
#include "riordan/somos.hpp"

namespace riordan {

/// The two conjectured families: rho = 0 and rho = 0^n (a single leading 1).
enum class ConjectureKind { Rho0, RhoDelta };

inline const char* to_string(ConjectureKind kind) { return kind == ConjectureKind::Rho0 ? "rho0" : "rhodelta"; }

/// Predicted (alpha, beta) for A = [[1,a,b],[1,c,d]] with rho = 0.
inline std::pair<Rational, Rational> predicted_somos_rho0(const Rational& a, const Rational& b, const Rational& c,
                                                          const Rational& d) {
    const Rational s = b + a * b + d;
    const Rational alpha = s * s;
    const Rational b2 = b * b, b3 = b2 * b, b4 = b3 * b;
    const Rational beta = b4 - b3 * (2 + 3 * a + a * a - 2 * c) + b * (a + a * a - a * c - 2 * d) * d +
                          (1 + a - c) * d * d - b2 * (c + a * c - c * c + 2 * d + 3 * a * d);
    return {alpha, beta};
}

/// Predicted (alpha, beta) for A = [[1,a,b],[1,c,d]] with rho = 0^n, term for term as printed.
inline std::pair<Rational, Rational> predicted_somos_rho_delta(const Rational& a, const Rational& b,
                                                               const Rational& c, const Rational& d) {
    const Rational s = 4 + a * a + 3 * b + a * (4 + b) + c + d;
    const Rational alpha = s * s;
    const Rational a2 = a * a, a3 = a2 * a, a4 = a3 * a, a5 = a4 * a;
    const Rational b2 = b * b, b3 = b2 * b, b4 = b3 * b;
    const Rational c2 = c * c, c3 = c2 * c;
    const Rational d2 = d * d;
    Rational beta = -16 - a5 + b4 - 3 * a4 * (3 + b) + 2 * b3 * (-2 + c) - 8 * c - 4 * c2 - c3;
    beta += b2 * (-28 - c + c2 - 8 * d) - 8 * d - 6 * c * d - 2 * c2 * d - d2 - c * d2;
    beta -= a3 * (32 + 23 * b + 3 * b2 + c + 2 * d) + 2 * b * (20 + c2 + 9 * d + d2 + 3 * c * (2 + d));
    beta -= a2 * (56 + 18 * b2 + b3 + 10 * d + c * (6 + d) + b * (66 + c + 5 * d));
    beta -= a * (48 + 3 * b3 + 2 * c2 + 16 * d + d2 + b2 * (38 - 2 * c + 3 * d) + c * (12 + 5 * d) +
                 b * (84 - c2 + 19 * d + c * (8 + d)));
    return {alpha, beta};
}

enum class PointStatus { Confirmed, Degenerate, Counterexample };

inline const char* to_string(PointStatus s) {
    switch (s) {
        case PointStatus::Confirmed: return "confirmed";
        case PointStatus::Degenerate: return "degenerate";
        case PointStatus::Counterexample: return "counterexample";
    }
    return "?";
}

struct ConjecturePoint {
    std::array<long, 4> params{};  // a, b, c, d
    Rational alpha, beta;
    Sequence hankel;
    PointStatus status = PointStatus::Degenerate;
    long failing_index = -1;
};

/**
 * Hankel transform of f/x for the closed form at one parameter tuple, checked
 * against the predicted Somos-4 parameters in product form. Tuples with
 * alpha = 0 or fewer than two informative windows are degenerate.
 */
inline ConjecturePoint evaluate_conjecture(ConjectureKind kind, const std::array<long, 4>& p,
                                           std::size_t order = kDefaultOrder) {
    if (order < 4) throw InsufficientOrder("conjecture evaluation needs order >= 4");
    ConjecturePoint out;
    out.params = p;
    const Rational a = p[0], b = p[1], c = p[2], d = p[3];
    const Rational rho0 = kind == ConjectureKind::Rho0 ? 0 : 1;
    std::tie(out.alpha, out.beta) =
        kind == ConjectureKind::Rho0 ? predicted_somos_rho0(a, b, c, d) : predicted_somos_rho_delta(a, b, c, d);
    const Sequence s = to_sequence(closed_form_f_general(a, b, c, d, rho0, order).divided_by_x());
    out.hankel = hankel_transform(s, max_hankel_index(s.size()));
    if (sgn(out.alpha) == 0 || usable_somos_windows(out.hankel) < 2) {
        out.status = PointStatus::Degenerate;
        return out;
    }
    if (const auto fail = somos_first_failure(out.hankel, out.alpha, out.beta)) {
        out.status = PointStatus::Counterexample;
        out.failing_index = *fail;
    } else {
        out.status = PointStatus::Confirmed;
    }
    return out;
}

struct SweepReport {
    ConjectureKind kind = ConjectureKind::Rho0;
    long lo = 0, hi = 0;
    std::size_t order = kDefaultOrder;
    std::size_t total = 0, confirmed = 0, degenerate = 0;
    std::vector<ConjecturePoint> counterexamples;

    bool consistent() const { return total == confirmed + degenerate + counterexamples.size(); }
};

/// Evaluates every tuple of [lo, hi]^4 on worker threads; the report lists
/// counterexamples in lexicographic parameter order regardless of scheduling.
inline SweepReport sweep_conjecture(ConjectureKind kind, long lo, long hi, std::size_t order = kDefaultOrder,
                                    unsigned threads = 0) {
    if (lo > hi) throw MalformedRange(std::to_string(lo) + ".." + std::to_string(hi) + " is empty");
    std::vector<std::array<long, 4>> tuples;
    for (long a = lo; a <= hi; ++a)
        for (long b = lo; b <= hi; ++b)
            for (long c = lo; c <= hi; ++c)
                for (long d = lo; d <= hi; ++d) tuples.push_back({a, b, c, d});

    std::vector<ConjecturePoint> points(tuples.size());
    std::vector<std::exception_ptr> errors(tuples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) {
            try {
                points[i] = evaluate_conjecture(kind, tuples[i], order);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tuples.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    SweepReport report;
    report.kind = kind;
    report.lo = lo;
    report.hi = hi;
    report.order = order;
    report.total = points.size();
    for (auto& p : points) {
        switch (p.status) {
            case PointStatus::Confirmed: ++report.confirmed; break;
            case PointStatus::Degenerate: ++report.degenerate; break;
            case PointStatus::Counterexample: report.counterexamples.push_back(std::move(p)); break;
        }
    }
    return report;
}

inline SweepReport sweep_conjecture_rho0(long lo, long hi, std::size_t order = kDefaultOrder) {
    return sweep_conjecture(ConjectureKind::Rho0, lo, hi, order);
}

inline SweepReport sweep_conjecture_rho_delta(long lo, long hi, std::size_t order = kDefaultOrder) {
    return sweep_conjecture(ConjectureKind::RhoDelta, lo, hi, order);
}

/// "lo..hi" with integer bounds and lo <= hi.
inline std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw MalformedRange("expected lo..hi, got \"" + text + "\"");
    auto to_long = [&](const std::string& part) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(part, &used);
        } catch (const std::exception&) {
            throw MalformedRange("bad bound \"" + part + "\" in \"" + text + "\"");
        }
        if (used != part.size()) throw MalformedRange("bad bound \"" + part + "\" in \"" + text + "\"");
        return v;
    };
    const long lo = to_long(text.substr(0, dots));
    const long hi = to_long(text.substr(dots + 2));
    if (lo > hi) throw MalformedRange("\"" + text + "\" is empty (lo > hi)");
    return {lo, hi};
}

inline json to_json_value(const ConjecturePoint& p) {
    return json{{"params", json::array({p.params[0], p.params[1], p.params[2], p.params[3]})},
                {"alpha", to_string(p.alpha)},
                {"beta", to_string(p.beta)},
                {"status", to_string(p.status)},
                {"failing_index", p.failing_index},
                {"hankel", to_json_value(p.hankel)}};
}

inline json to_json_value(const SweepReport& r) {
    json ce = json::array();
    for (const auto& p : r.counterexamples) ce.push_back(to_json_value(p));
    return json{{"sweep", to_string(r.kind)},
                {"range", json::array({r.lo, r.hi})},
                {"order", r.order},
                {"total", r.total},
                {"confirmed", r.confirmed},
                {"degenerate", r.degenerate},
                {"counterexamples", ce}};
}

}  // namespace riordan
