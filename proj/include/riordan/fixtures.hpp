#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "riordan/amatrix.hpp"
#include "riordan/errors.hpp"
#include "riordan/hankel.hpp"
#include "riordan/json_io.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/somos.hpp"

namespace riordan {

/**
 * A fixture pairs a source (an A-matrix, a Riordan pair given by rational
 * functions, the two-row closed form, or the Narayana coefficient array) with
 * a list of checks against verbatim expected values. Sources and checks stay
 * as JSON until evaluation; their shapes are validated on load.
 */
struct Fixture {
    std::string id;
    std::string description;
    json source;
    std::vector<json> checks;
    std::size_t order = kDefaultOrder;
};

struct FixtureCorpus {
    std::vector<Fixture> fixtures;
};

struct CheckOutcome {
    std::string kind;
    bool passed = false;
    std::string message;
};

struct FixtureResult {
    std::string id;
    std::vector<CheckOutcome> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
    }
};

struct FixtureReport {
    std::vector<FixtureResult> results;

    std::size_t failed() const {
        return static_cast<std::size_t>(
            std::count_if(results.begin(), results.end(), [](const FixtureResult& r) { return !r.passed(); }));
    }
    std::size_t check_count() const {
        std::size_t n = 0;
        for (const auto& r : results) n += r.checks.size();
        return n;
    }
    bool all_passed() const { return failed() == 0; }
};

namespace detail {

inline const std::vector<std::string>& source_kinds() {
    static const std::vector<std::string> kinds{"amatrix", "pair", "closed_form", "narayana"};
    return kinds;
}

inline const std::vector<std::string>& check_kinds() {
    static const std::vector<std::string> kinds{
        "triangle", "f",     "column",   "hankel",         "somos",          "aseq",
        "zseq",     "production", "jfraction", "quasi_involution", "diagonal_sums", "entry_identity",
        "recurrence", "two_row_recurrence", "pair_equals", "closed_form"};
    return kinds;
}

inline bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

inline std::vector<std::vector<Rational>> rows_from_json(const json& j) {
    if (!j.is_array()) throw MalformedFixture("expected an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j) rows.push_back(rationals_from_json(r));
    return rows;
}

inline DenseMatrix dense_from_json(const json& j) {
    DenseMatrix m{rows_from_json(j)};
    for (const auto& r : m.rows)
        if (r.size() != m.nrows()) throw MalformedFixture("production matrix rows must be square");
    return m;
}

/// {"num": [...], "den": [...]} expanded to the given order.
inline PowerSeries rational_function_from_json(const json& j, std::size_t order) {
    if (!j.is_object() || !j.contains("num")) throw MalformedFixture("rational function needs \"num\"");
    const auto num = rationals_from_json(j["num"]);
    const auto den = j.contains("den") ? rationals_from_json(j["den"]) : std::vector<Rational>{1};
    return rational_function(num, den, order);
}

inline RiordanPair pair_from_json(const json& j, std::size_t order) {
    RiordanPair r = make_riordan_pair(rational_function_from_json(j.at("g"), order),
                                      rational_function_from_json(j.at("f"), order));
    if (j.value("inverse", false)) r = riordan_inverse(r);
    if (j.value("binomial", false)) r = riordan_mul(pascal_pair(r.order()), r);
    return r;
}

inline std::string describe_first_mismatch(const std::vector<Rational>& got, const std::vector<Rational>& want) {
    if (got.size() < want.size())
        return "only " + std::to_string(got.size()) + " terms available, " + std::to_string(want.size()) + " expected";
    for (std::size_t i = 0; i < want.size(); ++i)
        if (got[i] != want[i])
            return "term " + std::to_string(i) + ": got " + to_string(got[i]) + ", expected " + to_string(want[i]);
    return {};
}

template <class Matrix>
std::string describe_matrix_mismatch(const Matrix& got, const std::vector<std::vector<Rational>>& want) {
    for (std::size_t n = 0; n < want.size(); ++n) {
        for (std::size_t k = 0; k < want[n].size(); ++k) {
            const Rational g = k < got.rows[n].size() ? got.rows[n][k] : Rational(0);
            if (g != want[n][k])
                return "entry (" + std::to_string(n) + "," + std::to_string(k) + "): got " + to_string(g) +
                       ", expected " + to_string(want[n][k]);
        }
    }
    return {};
}

inline std::string describe_triangle_mismatch(const LowerTriangle& got, const std::vector<std::vector<Rational>>& want) {
    DenseMatrix d{got.rows()};
    return describe_matrix_mismatch(d, want);
}

}  // namespace detail

/// Validates the shape of a corpus document {"fixtures": [...]}.
inline FixtureCorpus parse_fixture_corpus(const json& doc) {
    if (!doc.is_object() || !doc.contains("fixtures") || !doc["fixtures"].is_array())
        throw MalformedFixture("corpus must be an object with a \"fixtures\" array");
    FixtureCorpus corpus;
    std::vector<std::string> seen;
    for (const auto& f : doc["fixtures"]) {
        Fixture fx;
        if (!f.is_object() || !f.contains("id") || !f["id"].is_string()) throw MalformedFixture("fixture without an id");
        fx.id = f["id"].get<std::string>();
        if (detail::contains(seen, fx.id)) throw MalformedFixture("duplicate fixture id " + fx.id);
        seen.push_back(fx.id);
        fx.description = f.value("description", "");
        if (f.contains("order")) {
            if (!f["order"].is_number_unsigned() || f["order"].get<std::size_t>() < 4)
                throw MalformedFixture(fx.id + ": order must be an integer >= 4");
            fx.order = f["order"].get<std::size_t>();
        }
        if (!f.contains("source") || !f["source"].is_object() || !f["source"].contains("kind"))
            throw MalformedFixture(fx.id + ": missing source kind");
        fx.source = f["source"];
        if (!detail::contains(detail::source_kinds(), fx.source["kind"].get<std::string>()))
            throw MalformedFixture(fx.id + ": unknown source kind " + fx.source["kind"].dump());
        if (!f.contains("checks") || !f["checks"].is_array() || f["checks"].empty())
            throw MalformedFixture(fx.id + ": needs a non-empty \"checks\" array");
        for (const auto& c : f["checks"]) {
            if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string() ||
                !detail::contains(detail::check_kinds(), c["kind"].get<std::string>()))
                throw MalformedFixture(fx.id + ": bad check " + c.dump());
            fx.checks.push_back(c);
        }
        corpus.fixtures.push_back(std::move(fx));
    }
    return corpus;
}

inline FixtureCorpus load_fixture_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open fixture corpus " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_fixture_corpus(parse_json_text(buf.str(), path));
}

/// Computes the objects a fixture's checks compare against, lazily and once.
class FixtureEvaluator {
public:
    explicit FixtureEvaluator(const Fixture& fx) : fx_(fx), kind_(fx.source.at("kind").get<std::string>()) {
        if (kind_ == "amatrix") {
            json body = fx.source;
            body.erase("kind");
            spec_ = spec_from_json(body);
        }
    }

    const std::string& source_kind() const { return kind_; }
    const std::optional<AMatrixSpec>& spec() const { return spec_; }

    const RiordanPair& pair() {
        if (pair_) return *pair_;
        const std::size_t order = fx_.order;
        if (kind_ == "amatrix") {
            pair_ = bell_from_f(solve_f(*spec_, order).f);
        } else if (kind_ == "pair") {
            pair_ = detail::pair_from_json(fx_.source, order);
        } else if (kind_ == "closed_form") {
            const auto& s = fx_.source;
            pair_ = bell_from_f(closed_form_f_general(rational_from_json(s.at("a")), rational_from_json(s.at("b")),
                                                      rational_from_json(s.at("c")), rational_from_json(s.at("d")),
                                                      rational_from_json(s.value("rho0", json(0))), order));
        } else {
            throw MalformedFixture(fx_.id + ": source \"" + kind_ + "\" has no Riordan pair");
        }
        return *pair_;
    }

    LowerTriangle triangle(std::size_t nrows) {
        if (kind_ == "narayana") return narayana_poly_coeffs(nrows);
        return riordan_triangle(pair(), nrows);
    }

    /// Column k read from the diagonal down, as long as the order allows.
    Sequence column(std::size_t k) {
        const RiordanPair& r = pair();
        PowerSeries c = r.g;
        for (std::size_t i = 0; i < k; ++i) c = c * r.f;
        Sequence out;
        for (std::size_t n = k; n < c.order(); ++n) out.terms.push_back(c[n]);
        out.offset = static_cast<long>(k);
        return out;
    }

    Sequence hankel(std::size_t length) {
        if (length == 0) throw MalformedFixture(fx_.id + ": Hankel length must be positive");
        return hankel_transform(column(0), length - 1);
    }

private:
    const Fixture& fx_;
    std::string kind_;
    std::optional<AMatrixSpec> spec_;
    std::optional<RiordanPair> pair_;
};

namespace detail {

/// Empty string on success, otherwise a description of the failure.
inline std::string run_check(FixtureEvaluator& ev, const json& check) {
    const std::string kind = check.at("kind").get<std::string>();

    if (kind == "triangle") {
        const auto want = rows_from_json(check.at("rows"));
        const LowerTriangle expected = LowerTriangle::from_rows(want);
        const LowerTriangle got = ev.triangle(want.size());
        if (auto m = describe_triangle_mismatch(got, want); !m.empty()) return "series: " + m;
        if (ev.spec()) {
            const LowerTriangle direct = checked_direct_triangle(*ev.spec(), want.size());
            if (auto m = describe_triangle_mismatch(direct, want); !m.empty()) return "recurrence: " + m;
            if (!amatrix_recurrence_holds(*ev.spec(), expected)) return "expected rows violate the A-matrix recurrence";
        }
        return {};
    }
    if (kind == "f") return describe_first_mismatch(ev.pair().f.coeffs(), rationals_from_json(check.at("terms")));
    if (kind == "column") {
        const std::size_t k = check.value("k", std::size_t{0});
        return describe_first_mismatch(ev.column(k).terms, rationals_from_json(check.at("terms")));
    }
    if (kind == "hankel") {
        const auto want = rationals_from_json(check.at("terms"));
        return describe_first_mismatch(ev.hankel(want.size()).terms, want);
    }
    if (kind == "somos") {
        const Sequence h = ev.hankel(check.at("length").get<std::size_t>());
        const Rational alpha = rational_from_json(check.at("alpha"));
        const Rational beta = rational_from_json(check.at("beta"));
        const std::string mode = check.value("mode", std::string("fit"));
        if (mode == "fit" || mode == "fit_or_family") {
            const SomosFitResult fit = somos_fit(h);
            // A Hankel sequence such as all ones fits a whole line of (alpha, beta).
            if (mode == "fit_or_family" && fit.kind == SomosFitKind::Family &&
                fit.line_p * alpha + fit.line_q * beta == fit.line_r)
                return {};
            if (fit.kind != SomosFitKind::Unique || fit.alpha != alpha || fit.beta != beta)
                return "fit gave " + fit.describe() + ", expected Unique alpha=" + to_string(alpha) +
                       " beta=" + to_string(beta);
            return {};
        }
        if (mode != "verify") throw MalformedFixture("unknown somos mode \"" + mode + "\"");
        if (const auto fail = somos_first_failure(h, alpha, beta))
            return "product form fails at n=" + std::to_string(*fail);
        return {};
    }
    if (kind == "aseq") return describe_first_mismatch(a_sequence(ev.pair()).terms, rationals_from_json(check.at("terms")));
    if (kind == "zseq") return describe_first_mismatch(z_sequence(ev.pair()).terms, rationals_from_json(check.at("terms")));
    if (kind == "production") {
        const DenseMatrix want = dense_from_json(check.at("rows"));
        const DenseMatrix got = production_matrix(ev.pair(), want.nrows()).matrix;
        return describe_matrix_mismatch(got, want.rows);
    }
    if (kind == "jfraction") {
        const std::size_t depth = check.at("depth").get<std::size_t>();
        const Sequence s = ev.column(0);
        const JFraction jf = jfraction(s, depth);
        if (auto m = describe_first_mismatch(jf.b, rationals_from_json(check.at("b"))); !m.empty()) return "b: " + m;
        if (auto m = describe_first_mismatch(jf.lambda, rationals_from_json(check.at("lambda"))); !m.empty())
            return "lambda: " + m;
        const std::size_t n = 2 * depth + 1;
        if (!jf.terminated && !agree(jfraction_series(jf, n), PowerSeries(s.terms).truncated(n)))
            return "continued fraction does not reproduce the series";
        return {};
    }
    if (kind == "quasi_involution") {
        const RiordanPair& r = ev.pair();
        if (!agree(r.f.divided_by_x(), r.g)) return "not a Bell matrix (f != x g)";
        const PowerSeries g = deaerate(r.g.truncated(r.g.order() - r.g.order() % 2));
        if (!quasi_involution_check(g)) return "inverse is not (g(-x^2), x g(-x^2))";
        const auto want = rows_from_json(check.at("inverse_rows"));
        return describe_triangle_mismatch(riordan_triangle(riordan_inverse(r), want.size()), want);
    }
    if (kind == "diagonal_sums") {
        const auto want = rationals_from_json(check.at("terms"));
        return describe_first_mismatch(diagonal_sums(ev.triangle(want.size())).terms, want);
    }
    if (kind == "entry_identity") {
        // t(target) = sum of coef * t(n, k), with every entry read from the computed triangle
        const auto target = check.at("target");
        const long tn = target.at(0).get<long>(), tk = target.at(1).get<long>();
        long max_row = tn;
        for (const auto& term : check.at("terms")) max_row = std::max(max_row, term.at(1).get<long>());
        const LowerTriangle t = ev.triangle(static_cast<std::size_t>(max_row + 1));
        Rational sum;
        for (const auto& term : check.at("terms"))
            sum += rational_from_json(term.at(0)) * t.at(term.at(1).get<long>(), term.at(2).get<long>());
        const Rational lhs = t.at(tn, tk);
        if (check.contains("value") && lhs != rational_from_json(check["value"]))
            return "t(" + std::to_string(tn) + "," + std::to_string(tk) + ") = " + to_string(lhs) + ", stated " +
                   check["value"].dump();
        if (lhs != sum) return "identity fails: " + to_string(lhs) + " != " + to_string(sum);
        return {};
    }
    if (kind == "recurrence") {
        const AMatrixSpec spec = spec_from_json(check.at("spec"));
        const std::size_t nrows = check.at("nrows").get<std::size_t>();
        if (!amatrix_recurrence_holds(spec, ev.triangle(nrows))) return "A-matrix recurrence has a nonzero residual";
        return {};
    }
    if (kind == "two_row_recurrence") {
        const std::size_t nrows = check.at("nrows").get<std::size_t>();
        if (!two_row_recurrence_holds(rational_from_json(check.at("a")), rational_from_json(check.at("b")),
                                      rational_from_json(check.at("c")), rational_from_json(check.at("d")),
                                      ev.triangle(nrows)))
            return "two-row recurrence fails";
        return {};
    }
    if (kind == "pair_equals") {
        const RiordanPair other = pair_from_json(check, ev.pair().order());
        if (!same_array(ev.pair(), other)) return "pairs differ";
        return {};
    }
    if (kind == "closed_form") {
        const PowerSeries f = closed_form_f_general(rational_from_json(check.at("a")), rational_from_json(check.at("b")),
                                                    rational_from_json(check.at("c")), rational_from_json(check.at("d")),
                                                    rational_from_json(check.value("rho0", json(0))), ev.pair().order());
        if (!agree(f, ev.pair().f)) return "closed form differs from the computed f";
        return {};
    }
    throw MalformedFixture("unknown check kind " + kind);
}

}  // namespace detail

/// Matches a fixture by exact id, id prefix, or the OEIS id attached to any of its checks.
inline bool fixture_matches(const Fixture& fx, const std::string& filter) {
    if (filter.empty() || fx.id.rfind(filter, 0) == 0) return true;
    return std::any_of(fx.checks.begin(), fx.checks.end(),
                       [&](const json& c) { return c.value("oeis", std::string()) == filter; });
}

inline FixtureResult run_fixture(const Fixture& fx) {
    FixtureResult result;
    result.id = fx.id;
    std::optional<FixtureEvaluator> ev;
    std::string setup_error;
    try {
        ev.emplace(fx);
    } catch (const std::exception& e) {
        setup_error = e.what();
    }
    for (const auto& check : fx.checks) {
        CheckOutcome out;
        out.kind = check.at("kind").get<std::string>();
        if (!ev) {
            out.message = setup_error;
        } else {
            try {
                out.message = detail::run_check(*ev, check);
                out.passed = out.message.empty();
            } catch (const std::exception& e) {
                out.message = e.what();
            }
        }
        result.checks.push_back(std::move(out));
    }
    return result;
}

/// Runs every fixture that matches the filter; an unmatched filter is an error.
inline FixtureReport run_fixtures(const FixtureCorpus& corpus, const std::optional<std::string>& filter = {}) {
    FixtureReport report;
    for (const auto& fx : corpus.fixtures)
        if (!filter || fixture_matches(fx, *filter)) report.results.push_back(run_fixture(fx));
    if (report.results.empty()) throw FixtureNotFound("no fixture matches \"" + filter.value_or("") + "\"");
    return report;
}

inline json to_json_value(const FixtureReport& report) {
    json results = json::array();
    for (const auto& r : report.results) {
        json checks = json::array();
        for (const auto& c : r.checks) {
            json entry{{"kind", c.kind}, {"passed", c.passed}};
            if (!c.passed) entry["message"] = c.message;
            checks.push_back(entry);
        }
        results.push_back(json{{"id", r.id}, {"passed", r.passed()}, {"checks", checks}});
    }
    return json{{"fixtures", report.results.size()},
                {"checks", report.check_count()},
                {"failed", report.failed()},
                {"results", results}};
}

/// One comparison of a computed fixture sequence against a b-file.
struct BfileComparison {
    std::string fixture_id;
    std::string check_kind;
    std::size_t compared = 0;
    std::string message;  // empty on agreement

    bool passed() const { return compared > 0 && message.empty(); }
};

/**
 * For every check tagged with the b-file's OEIS id, extends the fixture's
 * sequence as far as the fixture order allows and compares the overlap with
 * the b-file terms; the check's "offset" gives the OEIS index of its first term.
 */
inline std::vector<BfileComparison> crosscheck_bfile(const FixtureCorpus& corpus, const std::string& oeis,
                                                     const Sequence& bfile) {
    std::vector<BfileComparison> out;
    for (const auto& fx : corpus.fixtures) {
        for (const auto& check : fx.checks) {
            if (check.value("oeis", std::string()) != oeis) continue;
            BfileComparison cmp;
            cmp.fixture_id = fx.id;
            cmp.check_kind = check.at("kind").get<std::string>();
            try {
                FixtureEvaluator ev(fx);
                Sequence s;
                if (cmp.check_kind == "column") s = ev.column(check.value("k", std::size_t{0}));
                else if (cmp.check_kind == "hankel")
                    s = ev.hankel(std::min<std::size_t>(16, max_hankel_index(ev.column(0).size()) + 1));
                else if (cmp.check_kind == "diagonal_sums") s = diagonal_sums(ev.triangle(fx.order - 1));
                else if (cmp.check_kind == "aseq") s = a_sequence(ev.pair());
                else if (cmp.check_kind == "f") s = to_sequence(ev.pair().f);
                else throw MalformedFixture("check kind " + cmp.check_kind + " has no sequence to compare");
                const long offset = check.value("offset", 0L);
                for (std::size_t i = 0; i < s.size(); ++i) {
                    const long idx = offset + static_cast<long>(i) - bfile.offset;
                    if (idx < 0 || static_cast<std::size_t>(idx) >= bfile.size()) continue;
                    ++cmp.compared;
                    if (s[i] != bfile[static_cast<std::size_t>(idx)]) {
                        cmp.message = "index " + std::to_string(offset + static_cast<long>(i)) + ": computed " +
                                      to_string(s[i]) + ", b-file " + to_string(bfile[static_cast<std::size_t>(idx)]);
                        break;
                    }
                }
                if (cmp.compared == 0 && cmp.message.empty()) cmp.message = "no overlapping indices";
            } catch (const std::exception& e) {
                cmp.message = e.what();
            }
            out.push_back(std::move(cmp));
        }
    }
    return out;
}

}  // namespace riordan
