#pragma once

// The multiplicative group C^x with L = {1, -1} and H = {1, i, -1, -i}.
// The tent function phi(z) = 1 - |z| on the unit disc descends to
// f(zL) = (P_L phi)(zL) = 2 phi(z), which is H-invariant, and the nested
// Radon transform with normalized measure on H/L = {L, iL} reproduces f.
// This is the only floating-point part of the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "radon/errors.hpp"

namespace radon::circle {

using Complex = std::complex<double>;

/// Function of |z| that vanishes from `support_bound` outwards.
class RadialFunction {
public:
    RadialFunction(std::function<double(double)> evaluator, double support_bound)
        : evaluator_(std::move(evaluator)), support_bound_(support_bound) {}

    double operator()(double r) const { return r >= support_bound_ ? 0.0 : evaluator_(r); }
    double operator()(Complex z) const { return (*this)(std::abs(z)); }
    double support_bound() const { return support_bound_; }

private:
    std::function<double(double)> evaluator_;
    double support_bound_;
};

inline RadialFunction tent_phi() {
    return {[](double r) { return r < 1.0 ? 1.0 - r : 0.0; }, 1.0};
}

inline const std::vector<Complex>& subgroup_L() {
    static const std::vector<Complex> l{{1.0, 0.0}, {-1.0, 0.0}};
    return l;
}

inline const std::vector<Complex>& subgroup_H() {
    static const std::vector<Complex> h{{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return h;
}

/// Minimal representatives of H/L.
inline const std::vector<Complex>& fiber_reps() {
    static const std::vector<Complex> reps{{1.0, 0.0}, {0.0, 1.0}};
    return reps;
}

inline void require_nonzero(Complex z) {
    if (z == Complex(0.0, 0.0)) throw PreconditionError("0 is not an element of C^x");
}

/// f(zL) = sum_{l in L} phi(zl), counting measure on L.
inline double example_f(const RadialFunction& phi, Complex z) {
    require_nonzero(z);
    double s = 0.0;
    for (const auto& l : subgroup_L()) s += phi(z * l);
    return s;
}

/// R_{L,H} f(zH) = sum_{hL in H/L} f(zhL) eta(hL), eta normalized.
inline double example_radon(const std::function<double(Complex)>& f, Complex z) {
    require_nonzero(z);
    const double eta = 1.0 / static_cast<double>(fiber_reps().size());
    double s = 0.0;
    for (const auto& h : fiber_reps()) s += f(z * h) * eta;
    return s;
}

struct ExampleRow {
    double r;
    double angle;
    double f;
    double rf;
    double deviation;
};

struct ExampleReport {
    std::vector<ExampleRow> rows;
    double max_deviation = 0.0;            ///< max |R f - f| over the grid
    double max_invariance_deviation = 0.0;  ///< max |f(zh) - f(z)|, h in H
    double tolerance = 0.0;
    bool passed = true;
};

/// `radii` log-spaced moduli in [0.01, 2] times `angles` equally spaced
/// arguments.
inline std::vector<Complex> standard_grid(std::size_t radii = 100, std::size_t angles = 8) {
    std::vector<Complex> grid;
    grid.reserve(radii * angles);
    for (std::size_t i = 0; i < radii; ++i) {
        const double t = radii == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(radii - 1);
        const double r = 0.01 * std::pow(200.0, t);
        for (std::size_t j = 0; j < angles; ++j)
            grid.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles)));
    }
    return grid;
}

inline ExampleReport verify_example(std::span<const Complex> grid, double tolerance) {
    for (const auto& z : grid) require_nonzero(z);
    const RadialFunction phi = tent_phi();
    const auto f = [&](Complex z) { return example_f(phi, z); };

    ExampleReport report;
    report.tolerance = tolerance;
    report.rows.reserve(grid.size());
    for (const auto& z : grid) {
        const double fz = f(z);
        for (const auto& h : subgroup_H())
            report.max_invariance_deviation = std::max(report.max_invariance_deviation, std::abs(f(z * h) - fz));
        const double rf = example_radon(f, z);
        const double dev = std::abs(rf - fz);
        report.max_deviation = std::max(report.max_deviation, dev);
        report.rows.push_back({std::abs(z), std::arg(z), fz, rf, dev});
    }
    report.passed = report.max_deviation < tolerance && report.max_invariance_deviation < tolerance;
    return report;
}

}  // namespace radon::circle
