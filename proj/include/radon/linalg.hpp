#pragma once

// Exact rank, reduced row-echelon form, nullspace and inverse over the
// rationals. Elimination runs fraction-free (Bareiss) on an integer matrix
// obtained by clearing denominators row by row; row scaling preserves the row
// space, so rank, pivots and RREF are unchanged.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "radon/matrix.hpp"
#include "radon/rational.hpp"

namespace radon {

using RationalMatrix = Matrix<Rational>;

struct RrefResult {
    std::size_t rank = 0;
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

namespace detail {

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

inline Matrix<Integer> clear_denominators(const RationalMatrix& m) {
    Matrix<Integer> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer scale = 1;
        for (const auto& x : m.row(i)) scale = lcm(scale, boost::multiprecision::denominator(x));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m(i, j);
            out(i, j) = boost::multiprecision::numerator(x) * (scale / boost::multiprecision::denominator(x));
        }
    }
    return out;
}

/// In-place fraction-free forward elimination. Columns without a pivot are
/// skipped; every division by the previous pivot is exact.
inline std::vector<std::size_t> bareiss_echelon(Matrix<Integer>& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        const Integer pivot = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer factor = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) a(i, j) = (pivot * a(i, j) - factor * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline RrefResult rref(const RationalMatrix& m) {
    Matrix<Integer> a = detail::clear_denominators(m);
    std::vector<std::size_t> pivots = detail::bareiss_echelon(a);
    const std::size_t rank = pivots.size();

    RationalMatrix reduced(m.rows(), m.cols());
    for (std::size_t i = 0; i < rank; ++i) {
        const Integer& lead = a(i, pivots[i]);
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (a(i, j) != 0) reduced(i, j) = Rational(a(i, j), lead);
    }
    for (std::size_t i = rank; i-- > 0;) {
        const std::size_t pc = pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Rational factor = reduced(k, pc);
            if (factor == 0) continue;
            for (std::size_t j = pc; j < m.cols(); ++j)
                if (reduced(i, j) != 0) reduced(k, j) -= factor * reduced(i, j);
        }
    }
    return {rank, std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) {
    Matrix<Integer> a = detail::clear_denominators(m);
    return detail::bareiss_echelon(a).size();
}

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that
/// column.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact inverse, or std::nullopt when m is singular. Throws on non-square
/// input.
inline std::optional<RationalMatrix> invert(const RationalMatrix& m) {
    if (!m.square()) throw SpaceMismatch("invert requires a square matrix");
    const std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const RrefResult r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

}  // namespace radon
