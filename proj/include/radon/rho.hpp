#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radon/coset_space.hpp"
#include "radon/rational.hpp"

namespace radon {

/// Normalization of the Haar measure on a finite group (or subgroup):
/// counting gives every element mass 1, normalized gives mass 1/order.
enum class HaarConvention { counting, normalized };

inline std::string_view to_string(HaarConvention c) {
    return c == HaarConvention::counting ? "counting" : "normalized";
}

inline HaarConvention parse_convention(std::string_view s) {
    if (s == "counting") return HaarConvention::counting;
    if (s == "normalized") return HaarConvention::normalized;
    throw ValidationError("unknown Haar convention '" + std::string(s) + "'");
}

inline Rational haar_weight(std::size_t order, HaarConvention c) {
    return c == HaarConvention::counting ? Rational(1) : Rational(1, order);
}

namespace detail {

/// Modular function of the finite group formed by `elements` (a closed subset
/// of g), read off the defining identity  sum_y f(y) = D(x) sum_y f(yx)
/// with counting measure and f ranging over point masses. Indexed like
/// `elements`.
inline std::vector<Rational> modular_on(const FiniteGroup& g, std::span<const Element> elements) {
    std::vector<Rational> delta;
    delta.reserve(elements.size());
    for (auto x : elements) {
        std::optional<Rational> value;
        for (auto a : elements) {
            // f = point mass at a
            const Rational lhs = 1;
            Rational rhs = 0;
            for (auto y : elements)
                if (g.mul(y, x) == a) rhs += 1;
            const Rational ratio = lhs / rhs;
            if (value && *value != ratio)
                throw ValidationError("counting measure has no consistent modular factor at " + std::to_string(x));
            value = ratio;
        }
        delta.push_back(*value);
    }
    return delta;
}

}  // namespace detail

/// Positive function on G obeying rho(xh) = D_H(h) D_G(h)^-1 rho(x).
class RhoFunction {
public:
    static RhoFunction make(Subgroup h, std::vector<Rational> values) {
        const FiniteGroup& g = h.group();
        if (values.size() != g.order())
            throw ValidationError("rho-function needs one value per group element");
        for (Element x = 0; x < g.order(); ++x)
            if (values[x] <= 0) throw ValidationError("rho-function must be strictly positive (element " +
                                                      std::to_string(x) + ")");

        std::vector<Element> all(g.order());
        std::iota(all.begin(), all.end(), 0);
        const auto delta_g = detail::modular_on(g, all);
        const auto delta_h = detail::modular_on(g, h.elements());
        for (Element x = 0; x < g.order(); ++x)
            for (std::size_t i = 0; i < h.order(); ++i) {
                const Element hx = h.elements()[i];
                if (values[g.mul(x, hx)] != delta_h[i] / delta_g[hx] * values[x])
                    throw ValidationError("rho-function transformation law fails at x = " + std::to_string(x) +
                                          ", h = " + std::to_string(hx));
            }
        return RhoFunction(std::move(h), std::move(values));
    }

    static RhoFunction constant(Subgroup h, const Rational& c = 1) {
        const std::size_t n = h.group().order();
        return make(std::move(h), std::vector<Rational>(n, c));
    }

    /// Lifts one positive value per coset of G/H to the elements.
    static RhoFunction from_coset_values(Subgroup h, std::span<const Rational> per_coset) {
        const CosetSpace space(h);
        if (per_coset.size() != space.size()) throw ValidationError("rho-function needs one value per coset");
        std::vector<Rational> values(h.group().order());
        for (Element x = 0; x < values.size(); ++x) values[x] = per_coset[space.coset_of(x)];
        return make(std::move(h), std::move(values));
    }

    const Subgroup& subgroup() const { return subgroup_; }
    const FiniteGroup& group() const { return subgroup_.group(); }
    const Rational& operator()(Element x) const { return values_[x]; }
    const std::vector<Rational>& values() const { return values_; }

    bool is_constant() const {
        return std::all_of(values_.begin(), values_.end(), [&](const Rational& v) { return v == values_.front(); });
    }

private:
    RhoFunction(Subgroup h, std::vector<Rational> values) : subgroup_(std::move(h)), values_(std::move(values)) {}

    Subgroup subgroup_;
    std::vector<Rational> values_;
};

}  // namespace radon
