#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radon/errors.hpp"

namespace radon {

using Integer = boost::multiprecision::mpz_int;
/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. The two-argument constructor from built-in integers needs a
/// positive denominator; use make_rational when the sign is not known.
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ValidationError("zero denominator");
    return Rational(num, den);
}

/// Canonical "p/q" form; integers print without a denominator ("0", "-3").
inline std::string to_string(const Rational& r) {
    const Integer& num = boost::multiprecision::numerator(r);
    const Integer& den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(std::string_view text) {
    auto valid_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                           : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
        throw ValidationError("malformed rational: '" + std::string(text) + "'");
    std::string n(num), d(den);
    if (!n.empty() && n.front() == '+') n.erase(0, 1);
    if (!d.empty() && d.front() == '+') d.erase(0, 1);
    Integer in(n), id(d);
    if (id == 0) throw ValidationError("zero denominator: '" + std::string(text) + "'");
    return make_rational(in, id);
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational sum(std::span<const Rational> values) {
    Rational s = 0;
    for (const auto& v : values) s += v;
    return s;
}

inline std::vector<std::string> to_strings(std::span<const Rational> values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace radon
