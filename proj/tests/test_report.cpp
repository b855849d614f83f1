#include <gtest/gtest.h>

#include "radon/suite.hpp"
#include "support.hpp"

using namespace radon;
using namespace radon::verify;

namespace {

SuiteConfig quick(std::vector<std::string> groups, std::vector<Family> families) {
    SuiteConfig cfg;
    cfg.groups = std::move(groups);
    cfg.families = std::move(families);
    cfg.random_functions = 10;
    cfg.random_rhos = 2;
    return cfg;
}

std::size_t brute_force_nested_pairs(const FiniteGroup& g) {
    const auto subs = oracle::subgroups_by_subsets(g.table());
    std::size_t n = 0;
    for (const auto& h : subs)
        for (const auto& l : subs) n += std::includes(h.begin(), h.end(), l.begin(), l.end());
    return n;
}

}  // namespace

TEST(Report, EmptyReportIsEmptyArray) {
    EXPECT_EQ(dump_report({}), "[]\n");
    EXPECT_TRUE(json::parse(dump_report({})).is_array());
}

TEST(Report, FailingClaimCarriesWitness) {
    CaseBuilder b(CaseId{"Z2", Family::projections, "", "{0}", "", "counting", 0});
    b.claim("PH_rank_kernel", [] { return Outcome{json{{"rank", 7}}, "synthetic failure", ""}; });
    b.claim("PstarP_is_convolution", [] { return Outcome{}; });
    b.claim("PPstar_identity_normalized", []() -> Outcome { throw std::runtime_error("boom"); });
    b.claim("PPstar_counting_scaling", [] { return Outcome{}; });
    const CaseReport r = b.finish();
    EXPECT_TRUE(r.failed());
    const json j = json::parse(dump_report(std::vector<CaseReport>{r}));
    EXPECT_EQ(j[0]["claims"][0]["status"], "fail");
    EXPECT_EQ(j[0]["claims"][0]["witness"]["rank"], 7);
    EXPECT_EQ(j[0]["claims"][1]["status"], "pass");
    EXPECT_EQ(j[0]["claims"][2]["status"], "fail");
    EXPECT_EQ(j[0]["claims"][2]["detail"], "exception: boom");
}

TEST(Report, ManifestIsEnforced) {
    CaseBuilder missing(CaseId{"Z2", Family::projections, "", "{0}", "", "counting", 0});
    missing.claim("PH_rank_kernel", [] { return Outcome{}; });
    EXPECT_THROW(missing.finish(), std::logic_error);

    CaseBuilder twice(CaseId{"Z2", Family::projections, "", "{0}", "", "counting", 0});
    for (const auto& name : claim_manifest(Family::projections)) twice.claim(name, [] { return Outcome{}; });
    twice.claim("PH_rank_kernel", [] { return Outcome{}; });
    EXPECT_THROW(twice.finish(), std::logic_error);
}

TEST(Report, RecordedClaimsNeverFail) {
    CaseBuilder b(CaseId{"Z2", Family::algebra, "{0}", "{0}", "", "counting", 0});
    for (const auto& name : claim_manifest(Family::algebra))
        b.claim(name, [&] { return is_recorded_claim(name) ? Outcome{json{{"x", 1}}, "", ""} : Outcome{}; });
    const CaseReport r = b.finish();
    EXPECT_FALSE(r.failed());
    EXPECT_EQ(r.find("left_unit")->status, ClaimStatus::recorded);
    EXPECT_EQ(r.find("left_unit")->holds, false);
}

TEST(Suite, S3NestedPairsAllPass) {
    const auto result = run_suite(quick({"S3"}, {Family::radon_nested}));
    EXPECT_EQ(result.cases.size(), brute_force_nested_pairs(symmetric(3)));
    EXPECT_EQ(result.cases.size(), 15u);
    EXPECT_FALSE(result.any_failure());
    for (const auto& c : result.cases) {
        ASSERT_EQ(c.claims.size(), claim_manifest(Family::radon_nested).size());
        for (const auto& claim : c.claims) EXPECT_EQ(claim.status, ClaimStatus::pass) << c.id.label() << " " << claim.name;
    }
}

TEST(Suite, ExplicitNonNestedPairIsRecorded) {
    SuiteConfig cfg = quick({"Z4"}, {Family::radon_nested});
    cfg.subgroup_l = "0,2";
    cfg.subgroup_h = "e";
    const auto result = run_suite(cfg);
    ASSERT_EQ(result.cases.size(), 1u);
    EXPECT_FALSE(result.any_failure());
    for (const auto& claim : result.cases[0].claims) {
        EXPECT_EQ(claim.status, ClaimStatus::recorded);
        EXPECT_FALSE(claim.asserted);
        EXPECT_NE(claim.detail.find("precondition"), std::string::npos);
    }
}

TEST(Suite, ExplicitNonConjugatePairIsRecorded) {
    SuiteConfig cfg = quick({"S3"}, {Family::transport});
    cfg.subgroup_k = "gen:2";
    cfg.subgroup_h = "gen:3";
    const auto result = run_suite(cfg);
    ASSERT_EQ(result.cases.size(), 1u);
    EXPECT_FALSE(result.any_failure());
    EXPECT_EQ(result.cases[0].claims[0].status, ClaimStatus::recorded);
}

TEST(Suite, RecordedCounterexamples) {
    const auto s3 = run_suite(quick({"S3"}, {Family::algebra}));
    bool left_unit_fails = false;
    for (const auto& c : s3.cases) {
        const auto* r = c.find("left_unit");
        if (c.id.l == "{0}" && c.id.h == "{0,2}") {
            EXPECT_EQ(r->holds, false);
            EXPECT_FALSE(r->witness.is_null());
        }
        left_unit_fails = left_unit_fails || r->holds == false;
    }
    EXPECT_TRUE(left_unit_fails);

    const auto v = run_suite(quick({"Z2xZ2"}, {Family::algebra}));
    bool found = false;
    for (const auto& c : v.cases) {
        const auto* r = c.find("subspace_equal_unrestricted");
        if (c.id.l == "{0,2}" && c.id.h == "{0,1,2,3}") {
            EXPECT_EQ(r->holds, false);
            EXPECT_EQ(r->witness["K"], "{0,1}");
            found = true;
        }
    }
    EXPECT_TRUE(found);
    EXPECT_FALSE(v.any_failure());
}

TEST(Suite, DeterministicOutput) {
    const SuiteConfig cfg = quick({"Z6", "S3"}, {Family::measures, Family::transport, Family::algebra});
    EXPECT_EQ(run_suite(cfg).json_text(), run_suite(cfg).json_text());
    SuiteConfig other = cfg;
    other.seed = 2;
    EXPECT_NE(run_suite(cfg).json_text(), run_suite(other).json_text());
}

TEST(Suite, ConventionIsRecordedAndPasses) {
    SuiteConfig cfg = quick({"D4"}, {Family::measures, Family::projections});
    cfg.convention = HaarConvention::normalized;
    const auto result = run_suite(cfg);
    EXPECT_FALSE(result.any_failure());
    for (const auto& c : result.cases) EXPECT_EQ(c.id.convention, "normalized");
}

TEST(Suite, ParseSubgroup) {
    const GroupPtr s3 = share(symmetric(3));
    EXPECT_TRUE(parse_subgroup(s3, "e").is_trivial());
    EXPECT_EQ(parse_subgroup(s3, "G").order(), 6u);
    EXPECT_EQ(parse_subgroup(s3, "gen:2").label(), "{0,2}");
    EXPECT_EQ(parse_subgroup(s3, "{0,2}").label(), "{0,2}");
    EXPECT_EQ(parse_subgroup(s3, "0,3,4").order(), 3u);
    EXPECT_THROW(parse_subgroup(s3, "0,1,2"), ValidationError);
    EXPECT_THROW(parse_subgroup(s3, "x"), ValidationError);
    EXPECT_THROW(parse_subgroup(s3, "0,,2"), ValidationError);
}

TEST(Serialize, RationalsRoundTrip) {
    const std::vector<Rational> v{Rational(1, 2), Rational(-3), Rational(0), Rational(22, 7)};
    EXPECT_EQ(rationals_to_json(v).dump(), R"(["1/2","-3","0","22/7"])");
    EXPECT_EQ(rationals_from_json(rationals_to_json(v)), v);
    EXPECT_THROW(rationals_from_json(json::parse(R"(["1/0"])")), ValidationError);
    EXPECT_EQ(to_csv(v), "1/2,-3,0,22/7\n");
}
