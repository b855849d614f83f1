#pragma once

// JSON and CSV encodings. Rationals are canonical "p/q" strings; JSON
// objects use nlohmann::json's sorted keys, so output is byte-stable.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "radon/measures.hpp"
#include "radon/radon_transform.hpp"

namespace radon {

using nlohmann::json;

inline json rationals_to_json(std::span<const Rational> values) { return to_strings(values); }

inline std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a JSON array of rational strings");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (x.is_string()) out.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer()) out.emplace_back(x.get<long long>());
        else throw ValidationError("rational values must be strings like \"3/2\"");
    }
    return out;
}

inline json to_json(const GroupFunction& f) { return rationals_to_json(f.values()); }
inline json to_json(const QuotientFunction& f) { return rationals_to_json(f.values()); }
inline json to_json(const QuotientMeasure& m) { return rationals_to_json(m.weights()); }
inline json to_json(const RhoFunction& r) { return rationals_to_json(r.values()); }
inline json to_json(const InvariantSubspace& s) { return s.blocks(); }

inline json to_json(const SpaceId& s) { return {{"space", s.label}, {"dim", s.dim}}; }

/// {"codomain": {...}, "cols": n, "domain": {...}, "entries": [row-major], "rows": m}
inline json to_json(const OperatorMatrix& m) {
    return {{"domain", to_json(m.domain)},
            {"codomain", to_json(m.codomain)},
            {"rows", m.entries.rows()},
            {"cols", m.entries.cols()},
            {"entries", rationals_to_json(m.entries.data())}};
}

inline std::string to_csv(const RationalMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += to_string(m(i, j));
        }
        out += '\n';
    }
    return out;
}

inline std::string to_csv(const OperatorMatrix& m) { return to_csv(m.entries); }

inline std::string to_csv(std::span<const Rational> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += to_string(values[i]);
    }
    return out + '\n';
}

}  // namespace radon
