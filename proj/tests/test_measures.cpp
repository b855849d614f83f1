#include <gtest/gtest.h>

#include "support.hpp"

using namespace radon;
using namespace support;

namespace {

struct Z4Fixture : ::testing::Test {
    GroupPtr z4 = share(cyclic(4));
    Subgroup h = Subgroup::from_elements(z4, {0, 2});
    RhoFunction rho12 = RhoFunction::from_coset_values(h, std::vector<Rational>{1, 2});
};

/// Direct double-sum form of the integral identity, computed without the
/// library's T_H: sum_x f(x) rho(x) w_G versus sum_{cosets} mu(c) w_H sum_h f(rep h).
Rational direct_rhs(const GroupFunction& f, const Subgroup& h, const QuotientMeasure& mu, const Rational& wh) {
    const auto& g = h.group();
    Rational total = 0;
    for (std::size_t c = 0; c < mu.space().size(); ++c) {
        Rational fiber = 0;
        for (auto e : h.elements()) fiber += f[g.mul(mu.space().rep(c), e)];
        total += mu[c] * wh * fiber;
    }
    return total;
}

}  // namespace

TEST(ModularFunction, TrivialOnCorpus) {
    for (const auto& g : corpus()) {
        const auto delta = modular_function(*g);
        for (const auto& d : delta) EXPECT_EQ(d, 1);
    }
}

TEST(HaarMeasure, Conventions) {
    const GroupPtr s3 = share(symmetric(3));
    EXPECT_EQ(haar_measure(s3, HaarConvention::counting).integrate(GroupFunction::constant(s3, 1)), 6);
    EXPECT_EQ(haar_measure(s3, HaarConvention::normalized).integrate(GroupFunction::constant(s3, 1)), 1);
    EXPECT_EQ(parse_convention("normalized"), HaarConvention::normalized);
    EXPECT_THROW(parse_convention("lebesgue"), ValidationError);
}

TEST_F(Z4Fixture, UnitRhoGivesInvariantMeasure) {
    const QuotientMeasure mu = measure_from_rho(RhoFunction::constant(h), HaarConvention::counting, HaarConvention::counting);
    EXPECT_EQ(mu.weights(), (std::vector<Rational>{1, 1}));
    EXPECT_TRUE(mu.is_invariant());
}

TEST_F(Z4Fixture, NonconstantRhoMeasure) {
    const QuotientMeasure mu = measure_from_rho(rho12, HaarConvention::counting, HaarConvention::counting);
    EXPECT_EQ(mu.weights(), (std::vector<Rational>{1, 2}));
    EXPECT_FALSE(mu.is_invariant());
    const QuotientMeasure mun = measure_from_rho(rho12, HaarConvention::normalized, HaarConvention::normalized);
    EXPECT_EQ(mun.weights(), (std::vector<Rational>{Rational(1, 2), 1}));
}

TEST_F(Z4Fixture, RhoLawIsEnforced) {
    EXPECT_EQ(rho12.values(), (std::vector<Rational>{1, 2, 1, 2}));
    EXPECT_THROW(RhoFunction::make(h, {1, 2, 3, 2}), ValidationError);
    EXPECT_THROW(RhoFunction::make(h, {0, 2, 0, 2}), ValidationError);
    EXPECT_NO_THROW(RhoFunction::make(h, {1, 2, 1, 2}));
}

TEST_F(Z4Fixture, RadonNikodymRatio) {
    EXPECT_EQ(radon_nikodym_ratio(rho12, 1, 0), 2);
    for (Element y = 0; y < 4; ++y) EXPECT_EQ(radon_nikodym_ratio(rho12, 0, y), 1);
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y) EXPECT_EQ(radon_nikodym_ratio(RhoFunction::constant(h), x, y), 1);
}

TEST_F(Z4Fixture, TransformTHSingleTerm) {
    const QuotientFunction t = project_TH(GroupFunction::indicator(z4, 1), rho12, HaarConvention::counting);
    EXPECT_EQ(t.values(), (std::vector<Rational>{0, Rational(1, 2)}));
}

TEST_F(Z4Fixture, ProjectionPH) {
    EXPECT_EQ(project_PH(GroupFunction::indicator(z4, 0), h, HaarConvention::counting).values(),
              (std::vector<Rational>{1, 0}));
    EXPECT_EQ(project_PH(GroupFunction::constant(z4, 1), h, HaarConvention::counting).values(),
              (std::vector<Rational>{2, 2}));
    const QuotientFunction phi(coset_space(h), {1, 0});
    EXPECT_EQ(pullback(phi).values(), (std::vector<Rational>{1, 0, 1, 0}));
}

TEST(ProjectionPH, MatchesBruteForceCosetSums) {
    const GroupPtr s3 = share(symmetric(3));
    const Subgroup h = gen(s3, {s3_12});
    const auto cosets = oracle::ordered_cosets(s3->table(), as_set(h));
    RationalSource rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const GroupFunction f(s3, rng.signed_vector(6));
        const QuotientFunction p = project_PH(f, h, HaarConvention::counting);
        for (std::size_t c = 0; c < cosets.size(); ++c) {
            Rational s = 0;
            for (auto x : cosets[c]) s += f[x];
            EXPECT_EQ(p[c], s);
        }
        EXPECT_EQ(project_PH(f, h, HaarConvention::normalized)[0], p[0] / 2);
    }
}

TEST(ProjectionPH, ConstantsMapToConstants) {
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g)) {
            const auto p = project_PH(GroupFunction::constant(g, Rational(3, 2)), h, HaarConvention::counting);
            for (const auto& v : p.values()) EXPECT_EQ(v, Rational(3, 2) * static_cast<long>(h.order()));
            EXPECT_EQ(pullback(QuotientFunction::constant(coset_space(h), 5)), GroupFunction::constant(g, 5));
        }
}

TEST(ProjectionTH, EqualsPHForUnitRho) {
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g))
            for (auto conv : {HaarConvention::counting, HaarConvention::normalized})
                EXPECT_EQ(operator_matrix(ProjectionTOp{RhoFunction::constant(h), conv}).entries,
                          operator_matrix(ProjectionPOp{h, conv}).entries);
}

TEST(QuotientIntegral, PointMassesAndRandomFunctions) {
    RationalSource rng(29);
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g)) {
            const std::size_t index = g->order() / h.order();
            std::vector<RhoFunction> rhos{RhoFunction::constant(h)};
            for (int i = 0; i < 3; ++i) rhos.push_back(RhoFunction::from_coset_values(h, rng.positive_vector(index)));
            for (const auto& rho : rhos)
                for (auto conv : {HaarConvention::counting, HaarConvention::normalized}) {
                    const QuotientMeasure mu = measure_from_rho(rho, conv, conv);
                    const Rational wg = haar_weight(g->order(), conv), wh = haar_weight(h.order(), conv);
                    std::vector<GroupFunction> fs{GroupFunction::indicator(g, g->identity()), GroupFunction::constant(g, 1)};
                    for (int i = 0; i < 4; ++i) fs.emplace_back(g, rng.signed_vector(g->order()));
                    for (const auto& f : fs) {
                        EXPECT_EQ(verify_quotient_integral(f, rho, mu, conv, conv), 0);
                        EXPECT_EQ(verify_rho_integral(f, rho, mu, conv, conv), 0);
                        Rational lhs = 0;
                        for (Element x = 0; x < g->order(); ++x) lhs += f[x] * rho(x) * wg;
                        EXPECT_EQ(lhs, direct_rhs(f, h, mu, wh));
                    }
                }
        }
}

TEST(QuotientIntegral, WrongMeasureLeavesResidual) {
    const GroupPtr z4 = share(cyclic(4));
    const Subgroup h = Subgroup::from_elements(z4, {0, 2});
    const RhoFunction rho = RhoFunction::from_coset_values(h, std::vector<Rational>{1, 2});
    const QuotientMeasure wrong(coset_space(h), {1, 1});
    EXPECT_NE(verify_quotient_integral(GroupFunction::constant(z4, 1), rho, wrong), 0);
}

TEST(QuotientMeasure, CocycleAndTranslation) {
    RationalSource rng(31);
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g)) {
            const auto rho = RhoFunction::from_coset_values(h, rng.positive_vector(g->order() / h.order()));
            const QuotientMeasure mu = measure_from_rho(rho, HaarConvention::counting, HaarConvention::counting);
            const CosetSpace& s = mu.space();
            EXPECT_EQ(mu.translate(g->identity()).weights(), mu.weights());
            for (Element x = 0; x < g->order(); ++x)
                for (Element y = 0; y < g->order(); ++y) {
                    const Rational lambda = radon_nikodym_ratio(rho, x, y);
                    EXPECT_EQ(mu.translate(x)[s.coset_of(y)], lambda * mu[s.coset_of(y)]);
                    // lambda(x1 x2, y) = lambda(x1, x2 y) lambda(x2, y)
                    for (Element z = 0; z < g->order(); z += 3)
                        EXPECT_EQ(radon_nikodym_ratio(rho, g->mul(x, z), y),
                                  radon_nikodym_ratio(rho, x, g->mul(z, y)) * radon_nikodym_ratio(rho, z, y));
                }
        }
}

TEST(ProjectionTH, L1BoundOnIndicatorsAndNonnegativeFunctions) {
    RationalSource rng(37);
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g)) {
            const auto rho = RhoFunction::from_coset_values(h, rng.positive_vector(g->order() / h.order()));
            const QuotientMeasure mu = measure_from_rho(rho, HaarConvention::counting, HaarConvention::counting);
            std::vector<GroupFunction> fs;
            for (Element x = 0; x < g->order(); ++x) fs.push_back(GroupFunction::indicator(g, x));
            for (int i = 0; i < 10; ++i) fs.emplace_back(g, rng.nonnegative_vector(g->order()));
            for (const auto& f : fs) {
                const QuotientFunction t = project_TH(f, rho, HaarConvention::counting);
                Rational norm = 0;
                for (std::size_t c = 0; c < t.size(); ++c) norm += abs(t[c]) * mu[c];
                EXPECT_LE(norm, counting_l1(f));
                // Nonnegative f: equality, by the integral identity.
                EXPECT_EQ(norm, counting_l1(f));
            }
        }
}

TEST(ProjectionPH, RankKernelAndAdjointIdentities) {
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g)) {
            const std::size_t index = g->order() / h.order();
            const OperatorMatrix p = operator_matrix(ProjectionPOp{h, HaarConvention::normalized});
            EXPECT_EQ(oracle::rank(as_rows(p.entries)), index);
            EXPECT_EQ(kernel_basis(p).size(), g->order() - index);
            // P* has matrix with a single 1 in each row.
            RationalMatrix pstar(g->order(), index);
            const CosetSpace s(h);
            for (Element x = 0; x < g->order(); ++x) pstar(x, s.coset_of(x)) = 1;
            EXPECT_EQ(p.entries * pstar, RationalMatrix::identity(index));
            const OperatorMatrix pc = operator_matrix(ProjectionPOp{h, HaarConvention::counting});
            const RationalMatrix ppc = pc.entries * pstar;
            for (std::size_t i = 0; i < index; ++i)
                for (std::size_t j = 0; j < index; ++j) EXPECT_EQ(ppc(i, j), i == j ? static_cast<long>(h.order()) : 0);
        }
}

TEST(ProjectionPH, PstarPIsConvolutionWithRestrictedHaar) {
    RationalSource rng(41);
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g)) {
            const auto mu = restriction_measure(h, HaarConvention::counting);
            for (int i = 0; i < 5; ++i) {
                const GroupFunction f(g, rng.signed_vector(g->order()));
                const GroupFunction lhs = pullback(project_PH(f, h, HaarConvention::counting));
                for (Element x = 0; x < g->order(); ++x) {
                    Rational s = 0;
                    for (auto e : h.elements()) s += f[g->mul(x, e)];
                    EXPECT_EQ(lhs[x], s);
                }
                EXPECT_EQ(lhs, convolve_measure(f, mu));
            }
        }
}

TEST(ProjectionTH, Surjective) {
    RationalSource rng(43);
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g)) {
            const auto rho = RhoFunction::from_coset_values(h, rng.positive_vector(g->order() / h.order()));
            const OperatorMatrix t = operator_matrix(ProjectionTOp{rho, HaarConvention::counting});
            EXPECT_EQ(oracle::rank(as_rows(t.entries)), g->order() / h.order());
        }
}

TEST(FiberMeasure, InvariantAndValidated) {
    const GroupPtr s3 = share(symmetric(3));
    const Subgroup h = Subgroup::whole(s3), l = gen(s3, {s3_12});
    const FiberMeasure eta = invariant_fiber_measure(h, l);
    EXPECT_EQ(eta.size(), 3u);
    EXPECT_EQ(eta.total(), 1);
    EXPECT_EQ(invariant_fiber_measure(h, l, HaarConvention::counting).total(), 3);
    EXPECT_THROW(invariant_fiber_measure(l, h), PreconditionError);
}
