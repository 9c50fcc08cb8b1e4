#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "riordan/amatrix.hpp"
#include "riordan/errors.hpp"
#include "riordan/hankel.hpp"
#include "riordan/somos.hpp"

namespace riordan {

using json = nlohmann::json;

/// Accepts JSON integers and "p" / "p/q" strings. Floating-point numbers are
/// rejected: they would already have lost precision in the parser.
inline Rational rational_from_json(const json& j) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InvalidSpec("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw InvalidSpec("expected an array, got " + j.dump());
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rational_from_json(v));
    return out;
}

/// Rationals always render as strings so that big values survive any JSON reader.
inline json to_json_value(const Rational& r) { return to_string(r); }

inline json to_json_value(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(to_string(r));
    return out;
}

inline json to_json_value(const Sequence& s) { return to_json_value(s.terms); }

inline json to_json_value(const LowerTriangle& t) {
    json out = json::array();
    for (const auto& row : t.rows()) out.push_back(to_json_value(row));
    return out;
}

inline json to_json_value(const DenseMatrix& m) {
    json out = json::array();
    for (const auto& row : m.rows) out.push_back(to_json_value(row));
    return out;
}

inline json to_json_value(const JFraction& jf) {
    return json{{"scale", to_string(jf.scale)},
                {"b", to_json_value(jf.b)},
                {"lambda", to_json_value(jf.lambda)},
                {"terminated", jf.terminated},
                {"convention", "S = s0/(1 - b0 x - lambda1 x^2/(1 - b1 x - lambda2 x^2/(...)))"}};
}

inline json to_json_value(const SomosFitResult& r) {
    json out{{"kind", to_string(r.kind)}, {"description", r.describe()}, {"windows_used", r.windows_used}};
    switch (r.kind) {
        case SomosFitKind::Unique:
            out["alpha"] = to_string(r.alpha);
            out["beta"] = to_string(r.beta);
            break;
        case SomosFitKind::Family:
            out["line"] = json::array({to_string(r.line_p), to_string(r.line_q), to_string(r.line_r)});
            break;
        case SomosFitKind::Inconsistent: out["failing_index"] = r.failing_index; break;
        case SomosFitKind::InsufficientData: break;
    }
    return out;
}

/// {"rows": [[...]], "repeat_last_row": false, "rho": [...]}; only "rows" is required.
inline AMatrixSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw InvalidSpec("A-matrix spec must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "rows" && key != "repeat_last_row" && key != "rho") throw InvalidSpec("unknown key \"" + key + "\"");
    if (!j.contains("rows") || !j["rows"].is_array()) throw InvalidSpec("\"rows\" must be an array of arrays");
    AMatrixSpec spec;
    for (const auto& row : j["rows"]) spec.rows.push_back(rationals_from_json(row));
    if (j.contains("repeat_last_row")) {
        if (!j["repeat_last_row"].is_boolean()) throw InvalidSpec("\"repeat_last_row\" must be a boolean");
        spec.repeat_last_row = j["repeat_last_row"].get<bool>();
    }
    if (j.contains("rho")) spec.rho = rationals_from_json(j["rho"]);
    spec.validate();
    return spec;
}

inline json spec_to_json(const AMatrixSpec& spec) {
    json rows = json::array();
    for (const auto& r : spec.rows) rows.push_back(to_json_value(r));
    return json{{"rows", rows}, {"repeat_last_row", spec.repeat_last_row}, {"rho", to_json_value(spec.rho)}};
}

/// Canonical text: keys sorted (nlohmann objects are ordered maps), two-space indent, trailing newline.
inline std::string render_json(const json& j) { return j.dump(2) + "\n"; }

inline json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(what + ": " + e.what());
    }
}

}  // namespace riordan
