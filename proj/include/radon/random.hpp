#pragma once

// Seeded pseudo-random rational test data. Draws use raw 64-bit engine
// output with modular reduction (no std distributions), so a seed produces
// the same values on every standard library.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "radon/rational.hpp"

namespace radon {

class RationalSource {
public:
    explicit RationalSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next(std::uint64_t bound) { return engine_() % bound; }

    /// p/q with p in [-9, 9], q in [1, 6].
    Rational signed_value() {
        const long p = static_cast<long>(next(19)) - 9;
        const long q = static_cast<long>(next(6)) + 1;
        return {p, q};
    }
    /// p/q with p in [0, 9], q in [1, 6].
    Rational nonnegative_value() { return {static_cast<long>(next(10)), static_cast<long>(next(6)) + 1}; }
    /// p/q with p in [1, 9], q in [1, 6].
    Rational positive_value() { return {static_cast<long>(next(9)) + 1, static_cast<long>(next(6)) + 1}; }

    std::vector<Rational> signed_vector(std::size_t n) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = signed_value();
        return v;
    }
    std::vector<Rational> nonnegative_vector(std::size_t n) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = nonnegative_value();
        return v;
    }
    std::vector<Rational> positive_vector(std::size_t n) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = positive_value();
        return v;
    }

private:
    std::mt19937_64 engine_;
};

/// FNV-1a mix of a base seed and a label, for per-case seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace radon
