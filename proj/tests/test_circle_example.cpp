#include <gtest/gtest.h>

#include <cmath>

#include "radon/circle_example.hpp"

using namespace radon;
using namespace radon::circle;

TEST(CircleExample, TentValues) {
    const RadialFunction phi = tent_phi();
    EXPECT_EQ(phi(0.5), 0.5);
    EXPECT_EQ(phi(1.0), 0.0);
    EXPECT_EQ(phi(2.0), 0.0);
    EXPECT_EQ(phi(Complex(0.0, 0.25)), 0.75);
}

TEST(CircleExample, FunctionOnQuotientByL) {
    const RadialFunction phi = tent_phi();
    EXPECT_EQ(example_f(phi, {0.5, 0.0}), 1.0);
    EXPECT_EQ(example_f(phi, {0.0, 0.5}), 1.0);
    EXPECT_EQ(example_f(phi, {1.5, 0.0}), 0.0);
    EXPECT_EQ(example_f(phi, {-0.5, 0.0}), example_f(phi, {0.5, 0.0}));
}

TEST(CircleExample, ReconstructionAtSamplePoints) {
    const RadialFunction phi = tent_phi();
    const auto f = [&](Complex z) { return example_f(phi, z); };
    EXPECT_EQ(example_radon(f, {0.5, 0.0}), 1.0);
    EXPECT_EQ(example_radon(f, std::polar(1.0, 0.3)), 0.0);
    for (int i = 1; i < 100; ++i) {
        const Complex z = std::polar(0.02 * i, 0.1 * i);
        // Independent evaluation: f(z) = 2 max(0, 1 - |z|).
        const double expected = 2.0 * std::max(0.0, 1.0 - std::abs(z));
        EXPECT_NEAR(example_radon(f, z), expected, 1e-12);
        EXPECT_NEAR(f(z), expected, 1e-12);
    }
}

TEST(CircleExample, GridVerification) {
    const auto grid = standard_grid(100, 8);
    ASSERT_EQ(grid.size(), 800u);
    EXPECT_NEAR(std::abs(grid.front()), 0.01, 1e-15);
    EXPECT_NEAR(std::abs(grid[799]), 2.0, 1e-12);
    const ExampleReport report = verify_example(grid, 1e-12);
    EXPECT_TRUE(report.passed);
    EXPECT_LT(report.max_deviation, 1e-12);
    EXPECT_LT(report.max_invariance_deviation, 1e-12);
    EXPECT_EQ(report.rows.size(), 800u);
}

TEST(CircleExample, EmptyGridAndZero) {
    EXPECT_TRUE(verify_example(std::vector<Complex>{}, 1e-12).passed);
    EXPECT_THROW(verify_example(std::vector<Complex>{{1.0, 0.0}, {0.0, 0.0}}, 1e-12), PreconditionError);
    EXPECT_THROW(example_f(tent_phi(), {0.0, 0.0}), PreconditionError);
}

TEST(CircleExample, SubgroupsAreClosed) {
    const auto& h = subgroup_H();
    for (const auto& a : h)
        for (const auto& b : h) {
            bool found = false;
            for (const auto& c : h) found = found || std::abs(a * b - c) < 1e-15;
            EXPECT_TRUE(found);
        }
    EXPECT_EQ(subgroup_L().size(), 2u);
    EXPECT_EQ(fiber_reps().size(), h.size() / subgroup_L().size());
}
