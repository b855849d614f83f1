#include <gtest/gtest.h>

#include "support.hpp"

using namespace radon;
using namespace support;

namespace {

void expect_axioms(const FiniteGroup& g) {
    const auto& t = g.table();
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x) {
        EXPECT_EQ(t[g.identity()][x], x);
        EXPECT_EQ(t[x][g.identity()], x);
        EXPECT_EQ(t[x][g.inv(x)], g.identity());
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) ASSERT_EQ(t[t[x][y]][z], t[x][t[y][z]]);
    }
}

GroupValidationError::Axiom failure(FiniteGroup::Table t) {
    try {
        FiniteGroup::from_table(std::move(t));
    } catch (const GroupValidationError& e) {
        return e.axiom();
    }
    ADD_FAILURE() << "table accepted";
    return GroupValidationError::Axiom::shape;
}

}  // namespace

TEST(FiniteGroup, CyclicFour) {
    const FiniteGroup z4 = cyclic(4);
    EXPECT_EQ(z4.order(), 4u);
    EXPECT_EQ(z4.table()[1][3], 0u);
    expect_axioms(z4);
}

TEST(FiniteGroup, SymmetricThreeHasThreeInvolutions) {
    const FiniteGroup s3 = symmetric(3);
    EXPECT_EQ(s3.order(), 6u);
    std::size_t involutions = 0;
    for (Element x = 0; x < 6; ++x) involutions += s3.element_order(x) == 2;
    EXPECT_EQ(involutions, 3u);
    for (Element t : {s3_12, s3_13, s3_23}) EXPECT_EQ(s3.element_order(t), 2u);
    expect_axioms(s3);
}

TEST(FiniteGroup, NamedConstructorsSatisfyAxioms) {
    for (const auto& name : {"Z1", "Z6", "D4", "D5", "Q8", "S4", "Z2xZ2", "Z2xS3"}) {
        SCOPED_TRACE(name);
        expect_axioms(group_from_name(name));
    }
    EXPECT_EQ(group_from_name("S4").order(), 24u);
    EXPECT_EQ(group_from_name("D4").order(), 8u);
    EXPECT_EQ(group_from_name("Z2xS3").order(), 12u);
}

TEST(FiniteGroup, Q8HasOneInvolution) {
    const FiniteGroup q = quaternion8();
    std::size_t involutions = 0, order4 = 0;
    for (Element x = 0; x < 8; ++x) {
        involutions += q.element_order(x) == 2;
        order4 += q.element_order(x) == 4;
    }
    EXPECT_EQ(involutions, 1u);
    EXPECT_EQ(order4, 6u);
    // i j = k, j i = -k
    EXPECT_EQ(q.mul(2, 4), 6u);
    EXPECT_EQ(q.mul(4, 2), 7u);
}

TEST(FiniteGroup, IdentityAxiomFailureOnOneElementCarrier) {
    EXPECT_EQ(failure({{1}}), GroupValidationError::Axiom::identity);
    try {
        FiniteGroup::from_table({{1}});
    } catch (const GroupValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("identity axiom fails"), std::string::npos);
    }
}

TEST(FiniteGroup, RejectsEachAxiom) {
    EXPECT_EQ(failure({}), GroupValidationError::Axiom::shape);
    EXPECT_EQ(failure({{0, 1}, {1}}), GroupValidationError::Axiom::shape);
    EXPECT_EQ(failure({{0, 1}, {1, 5}}), GroupValidationError::Axiom::range);
    // Left-zero-like row: identity 0, but 1*1 = 1 with no inverse for 1.
    EXPECT_EQ(failure({{0, 1}, {1, 1}}), GroupValidationError::Axiom::inverse);
    // Identity 0 and inverses exist, but (1*1)*2 != 1*(1*2).
    EXPECT_EQ(failure({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}), GroupValidationError::Axiom::associativity);
}

TEST(FiniteGroup, AssociativityWitnessIsAFailingTriple) {
    const FiniteGroup::Table t{{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
    try {
        FiniteGroup::from_table(t);
        FAIL();
    } catch (const GroupValidationError& e) {
        const auto [x, y, z] = e.witness();
        EXPECT_NE(t[t[x][y]][z], t[x][t[y][z]]);
    }
}

TEST(FiniteGroup, RandomTablePerturbationsAreRejected) {
    RationalSource rng(3);
    const FiniteGroup s3 = symmetric(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto t = s3.table();
        const std::size_t x = rng.next(6), y = rng.next(6);
        t[x][y] = (t[x][y] + 1 + rng.next(5)) % 6;
        EXPECT_THROW(FiniteGroup::from_table(t), GroupValidationError);
    }
}

TEST(Subgroups, CountsMatchSubsetEnumeration) {
    for (const auto& name : {"Z4", "Z6", "Z2xZ2", "S3", "D4", "Q8", "Z2xZ2xZ2", "D6", "Z12"}) {
        SCOPED_TRACE(name);
        const GroupPtr g = share(group_from_name(name));
        const auto expected = oracle::subgroups_by_subsets(g->table());
        const auto subs = all_subgroups(g);
        ASSERT_EQ(subs.size(), expected.size());
        for (const auto& s : subs) EXPECT_NE(std::find(expected.begin(), expected.end(), as_set(s)), expected.end());
    }
}

TEST(Subgroups, S4HasThirtySubgroups) {
    const auto subs = all_subgroups(share(symmetric(4)));
    EXPECT_EQ(subs.size(), 30u);
    std::map<std::size_t, std::size_t> by_order;
    for (const auto& s : subs) ++by_order[s.order()];
    EXPECT_EQ(by_order, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 9}, {3, 4}, {4, 7}, {6, 4}, {8, 3}, {12, 1}, {24, 1}}));
}

TEST(Subgroups, FromElementsValidatesClosure) {
    const GroupPtr z4 = share(cyclic(4));
    EXPECT_THROW(Subgroup::from_elements(z4, {0, 1}), ValidationError);
    EXPECT_THROW(Subgroup::from_elements(z4, {1, 3}), ValidationError);
    EXPECT_THROW(Subgroup::from_elements(z4, {0, 9}), ValidationError);
    EXPECT_EQ(Subgroup::from_elements(z4, {2, 0}).label(), "{0,2}");
}

TEST(Subgroups, IntersectAndJoin) {
    const GroupPtr s3 = share(symmetric(3));
    const Subgroup a = gen(s3, {s3_12}), b = gen(s3, {s3_13});
    EXPECT_TRUE(intersect(a, b).is_trivial());
    EXPECT_EQ(join(a, b).order(), 6u);
    const GroupPtr d4 = share(dihedral(4));
    for (const auto& x : all_subgroups(d4))
        for (const auto& y : all_subgroups(d4)) {
            const auto i = intersect(x, y), j = join(x, y);
            EXPECT_TRUE(i.is_subset_of(x) && i.is_subset_of(y));
            EXPECT_TRUE(x.is_subset_of(j) && y.is_subset_of(j));
            oracle::Set common;
            for (auto e : x.elements())
                if (y.contains(e)) common.insert(e);
            EXPECT_EQ(as_set(i), common);
        }
}

TEST(CosetSpace, IndexTwoSubgroupOfZ4) {
    const GroupPtr z4 = share(cyclic(4));
    const CosetSpace s(Subgroup::from_elements(z4, {0, 2}));
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.reps(), (std::vector<Element>{0, 1}));
    EXPECT_EQ(s.label(), "Z4/{0,2}");
}

TEST(CosetSpace, WholeGroupHasOneCoset) {
    for (const auto& g : corpus()) {
        const CosetSpace s(Subgroup::whole(g));
        EXPECT_EQ(s.size(), 1u);
        EXPECT_EQ(s.rep(0), g->identity());
    }
}

TEST(CosetSpace, MatchesBruteForceCosetsOnCorpus) {
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g)) {
            const CosetSpace s(h);
            const auto expected = oracle::ordered_cosets(g->table(), as_set(h));
            ASSERT_EQ(s.size(), expected.size());
            EXPECT_EQ(s.size() * h.order(), g->order());
            for (std::size_t c = 0; c < s.size(); ++c) {
                EXPECT_EQ(oracle::Set(s.members(c).begin(), s.members(c).end()), expected[c]);
                EXPECT_EQ(s.rep(c), *expected[c].begin());
            }
            for (Element x = 0; x < g->order(); ++x) {
                EXPECT_EQ(s.coset_of(x), oracle::index_of(expected, x));
                for (std::size_t c = 0; c < s.size(); ++c)
                    EXPECT_TRUE(expected[s.act(x, c)] == oracle::left_coset(g->table(), x, expected[c]));
            }
        }
}

TEST(CosetSpace, S3ModTranspositionHasThreeCosets) {
    const GroupPtr s3 = share(symmetric(3));
    EXPECT_EQ(CosetSpace(gen(s3, {s3_12})).size(), 3u);
}

TEST(Refinement, Z4ReductionMap) {
    const GroupPtr z4 = share(cyclic(4));
    EXPECT_EQ(refine_projection(Subgroup::trivial(z4), Subgroup::from_elements(z4, {0, 2})),
              (std::vector<std::size_t>{0, 1, 0, 1}));
}

TEST(Refinement, S3FibersOfSizeTwo) {
    const GroupPtr s3 = share(symmetric(3));
    const auto pi = refine_projection(Subgroup::trivial(s3), gen(s3, {s3_12}));
    ASSERT_EQ(pi.size(), 6u);
    std::vector<int> fiber(3, 0);
    for (auto c : pi) ++fiber.at(c);
    EXPECT_EQ(fiber, (std::vector<int>{2, 2, 2}));
    const auto cosets = oracle::ordered_cosets(s3->table(), {0, s3_12});
    for (Element x = 0; x < 6; ++x) EXPECT_EQ(pi[x], oracle::index_of(cosets, x));
}

TEST(Refinement, IdentityWhenEqualAndErrorWhenNotNested) {
    for (const auto& g : corpus())
        for (const auto& h : all_subgroups(g)) {
            const auto pi = refine_projection(h, h);
            for (std::size_t c = 0; c < pi.size(); ++c) EXPECT_EQ(pi[c], c);
        }
    const GroupPtr s3 = share(symmetric(3));
    EXPECT_THROW(refine_projection(gen(s3, {s3_12}), gen(s3, {s3_13})), PreconditionError);
}

TEST(Refinement, ComposesWithCanonicalProjections) {
    for (const auto& g : corpus())
        for (const auto& [l, h] : nested_pairs(g)) {
            const CosetSpace gl(l), gh(h);
            const auto pi = refine_projection(gl, gh);
            for (Element x = 0; x < g->order(); ++x) ASSERT_EQ(pi[gl.coset_of(x)], gh.coset_of(x));
        }
}

TEST(Conjugation, TranspositionsInS3) {
    const GroupPtr s3 = share(symmetric(3));
    const Subgroup k = gen(s3, {s3_12});
    EXPECT_EQ(conjugate_subgroup(k, s3_13), gen(s3, {s3_23}));
    EXPECT_EQ(as_set(conjugate_subgroup(k, s3_13)), oracle::conjugate(s3->table(), as_set(k), s3_13));
    EXPECT_EQ(conjugate_subgroup(k, s3->identity()), k);
    const Subgroup a3 = gen(s3, {3});
    ASSERT_EQ(a3.order(), 3u);
    for (Element g0 = 0; g0 < 6; ++g0) EXPECT_EQ(conjugate_subgroup(a3, g0), a3);
}

TEST(Conjugation, FindConjugator) {
    const GroupPtr s3 = share(symmetric(3));
    const Subgroup k = gen(s3, {s3_12}), h = gen(s3, {s3_23});
    const auto g0 = find_conjugator(k, h);
    ASSERT_TRUE(g0.has_value());
    EXPECT_EQ(conjugate_subgroup(k, *g0), h);
    EXPECT_EQ(find_conjugator(k, k), s3->identity());
    EXPECT_FALSE(find_conjugator(k, gen(s3, {3})).has_value());
}

TEST(Conjugation, AgreesWithBruteForceOnCorpus) {
    for (const auto& g : corpus()) {
        const auto subs = all_subgroups(g);
        for (const auto& k : subs)
            for (const auto& h : subs) {
                bool conjugate = false;
                for (Element x = 0; x < g->order() && !conjugate; ++x)
                    conjugate = oracle::conjugate(g->table(), as_set(k), x) == as_set(h);
                const auto g0 = find_conjugator(k, h);
                ASSERT_EQ(g0.has_value(), conjugate);
                if (g0) EXPECT_EQ(conjugate_subgroup(k, *g0), h);
            }
    }
}

TEST(Conjugation, NormalSubgroups) {
    for (const auto& g : corpus())
        for (const auto& k : all_subgroups(g)) {
            bool normal = true;
            for (Element x = 0; x < g->order(); ++x) normal = normal && oracle::conjugate(g->table(), as_set(k), x) == as_set(k);
            EXPECT_EQ(k.is_normal(), normal);
        }
}

TEST(GroupSpec, JsonRoundTripAndNames) {
    for (const auto& name : default_corpus()) {
        const FiniteGroup g = load_group(name);
        const FiniteGroup back = load_group(group_to_json(g).dump());
        EXPECT_EQ(back.table(), g.table());
        EXPECT_EQ(back.name(), g.name());
    }
    EXPECT_EQ(load_group(R"({"kind":"cyclic","n":5})").order(), 5u);
    EXPECT_EQ(load_group(R"({"kind":"product","factors":[{"kind":"cyclic","n":2},{"kind":"symmetric","n":3}]})").order(), 12u);
    EXPECT_THROW(load_group("X9"), ValidationError);
    EXPECT_THROW(load_group("/nonexistent/group.json"), ValidationError);
    EXPECT_THROW(load_group(R"({"kind":"table","table":[[1]]})"), GroupValidationError);
}

TEST(GroupSpec, CorpusOverride) {
    EXPECT_EQ(parse_corpus("Z4,S3"), (std::vector<std::string>{"Z4", "S3"}));
    EXPECT_THROW(parse_corpus(","), ValidationError);
}
