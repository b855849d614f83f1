#pragma once

// Verification reports. A case is one (group, family, subgroups) selection;
// each case carries exactly one result per claim in its family's manifest.
// Asserted claims pass or fail; recorded claims never fail and instead
// carry whether the statement held.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "radon/errors.hpp"

namespace radon::verify {

using nlohmann::json;

enum class Family { measures, projections, radon_nested, radon_general, algebra, transport, example };

inline constexpr Family kAllFamilies[] = {Family::measures, Family::projections, Family::radon_nested,
                                          Family::radon_general, Family::algebra, Family::transport,
                                          Family::example};

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::measures: return "measures";
        case Family::projections: return "projections";
        case Family::radon_nested: return "radon-nested";
        case Family::radon_general: return "radon-general";
        case Family::algebra: return "algebra";
        case Family::transport: return "transport";
        case Family::example: return "example";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    for (auto f : kAllFamilies)
        if (to_string(f) == s) return f;
    throw ValidationError("unknown claim family '" + std::string(s) + "'");
}

inline const std::vector<std::string>& claim_manifest(Family f) {
    static const std::vector<std::string> measures{
        "modular_function_trivial",    "unit_rho_measure_invariant", "quotient_integral_unit_rho",
        "quotient_integral_random_rho", "radon_nikodym_cocycle",     "TH_l1_bound",
        "TH_surjective",               "TH_equals_PH_for_unit_rho"};
    static const std::vector<std::string> projections{"PH_rank_kernel", "PstarP_is_convolution",
                                                      "PPstar_identity_normalized", "PPstar_counting_scaling"};
    static const std::vector<std::string> radon_nested{
        "reconstruction_roundtrip", "reconstruction_right_inverse", "R_Rstar_identity", "Rstar_R_pullback",
        "rank_kernel_law",          "module_property",              "support_containment",
        "restricted_bijectivity",   "trivial_L_is_PH",              "counting_fiber_scaling"};
    static const std::vector<std::string> algebra{
        "invariant_subspace_dimension", "pullback_membership", "chi_HL_membership",         "left_ideal",
        "right_unit",                   "left_unit",           "subspace_equal_restricted", "subspace_equal_unrestricted"};
    static const std::vector<std::string> radon_general{"well_defined",           "restricted_bijective",
                                                        "pointwise_identity",     "pullback_identity",
                                                        "dual_restricted_bijective", "nested_consistency"};
    static const std::vector<std::string> transport{
        "witness_valid",     "theta_bijective_equivariant", "tau_permutation",  "tau_matches_definition",
        "tau_norms_preserved", "T_matrix_product",          "T_closed_form",    "T_bijective_rank",
        "T_multiplicative",  "T_convolution_multiplicative"};
    static const std::vector<std::string> example{"tent_phi_values", "example_f_half", "membership_invariance",
                                                  "reconstruction_identity", "support_vanishes"};
    switch (f) {
        case Family::measures: return measures;
        case Family::projections: return projections;
        case Family::radon_nested: return radon_nested;
        case Family::radon_general: return radon_general;
        case Family::algebra: return algebra;
        case Family::transport: return transport;
        case Family::example: return example;
    }
    return example;
}

/// Claims the artifact reports as data instead of asserting.
inline bool is_recorded_claim(std::string_view name) {
    return name == "left_unit" || name == "subspace_equal_unrestricted" || name == "T_convolution_multiplicative";
}

enum class ClaimStatus { pass, fail, recorded };

inline std::string_view to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::recorded: return "recorded";
    }
    return "?";
}

struct ClaimResult {
    std::string name;
    ClaimStatus status = ClaimStatus::pass;
    bool asserted = true;
    std::optional<bool> holds;  ///< recorded claims only
    std::string residual;       ///< exact residual where one is defined
    std::string detail;
    json witness;               ///< counterexample data, null when none
};

struct CaseId {
    std::string group;
    Family family = Family::measures;
    std::string l, h, k;  ///< subgroup labels, empty when unused
    std::string convention;
    std::uint64_t seed = 0;

    std::string label() const {
        std::string s = group + ":" + std::string(to_string(family));
        if (!l.empty()) s += ":L=" + l;
        if (!h.empty()) s += ":H=" + h;
        if (!k.empty()) s += ":K=" + k;
        return s;
    }
};

struct CaseReport {
    CaseId id;
    std::vector<ClaimResult> claims;
    std::optional<double> seconds;

    bool failed() const {
        return std::any_of(claims.begin(), claims.end(),
                           [](const ClaimResult& c) { return c.asserted && c.status == ClaimStatus::fail; });
    }
    const ClaimResult* find(std::string_view name) const {
        for (const auto& c : claims)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// What a claim body returns: no witness means the statement held.
struct Outcome {
    std::optional<json> witness;
    std::string detail;
    std::string residual;
};

inline ClaimResult evaluate_claim(const std::string& name, bool asserted, const std::function<Outcome()>& body) {
    ClaimResult r;
    r.name = name;
    r.asserted = asserted;
    bool held = false;
    try {
        Outcome o = body();
        held = !o.witness.has_value();
        if (o.witness) r.witness = std::move(*o.witness);
        r.detail = std::move(o.detail);
        r.residual = std::move(o.residual);
    } catch (const std::exception& e) {
        held = false;
        r.detail = std::string("exception: ") + e.what();
    }
    if (asserted) {
        r.status = held ? ClaimStatus::pass : ClaimStatus::fail;
    } else {
        r.status = ClaimStatus::recorded;
        r.holds = held;
    }
    return r;
}

/// Collects claim results for one case and enforces the manifest.
class CaseBuilder {
public:
    explicit CaseBuilder(CaseId id) : id_(std::move(id)) {}

    void claim(const std::string& name, const std::function<Outcome()>& body) {
        results_.push_back(evaluate_claim(name, !is_recorded_claim(name), body));
    }

    /// Every manifest claim as a recorded, unevaluated entry.
    void precondition_violation(const std::string& reason) {
        for (const auto& name : claim_manifest(id_.family)) {
            ClaimResult r;
            r.name = name;
            r.asserted = false;
            r.status = ClaimStatus::recorded;
            r.detail = "precondition violated: " + reason;
            results_.push_back(std::move(r));
        }
    }

    CaseReport finish(std::optional<double> seconds = std::nullopt) {
        const auto& manifest = claim_manifest(id_.family);
        std::vector<ClaimResult> ordered;
        ordered.reserve(manifest.size());
        for (const auto& name : manifest) {
            auto count = std::count_if(results_.begin(), results_.end(),
                                       [&](const ClaimResult& c) { return c.name == name; });
            if (count != 1)
                throw std::logic_error("claim '" + name + "' reported " + std::to_string(count) + " times in case " +
                                       id_.label());
            ordered.push_back(*std::find_if(results_.begin(), results_.end(),
                                            [&](const ClaimResult& c) { return c.name == name; }));
        }
        if (results_.size() != manifest.size()) throw std::logic_error("unlisted claim in case " + id_.label());
        return {std::move(id_), std::move(ordered), seconds};
    }

private:
    CaseId id_;
    std::vector<ClaimResult> results_;
};

inline json to_json(const ClaimResult& c) {
    json j = {{"name", c.name},
              {"status", std::string(to_string(c.status))},
              {"asserted", c.asserted},
              {"witness", c.witness}};
    if (c.holds) j["holds"] = *c.holds;
    if (!c.residual.empty()) j["residual"] = c.residual;
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

inline json to_json(const CaseId& id) {
    json j = {{"group", id.group},
              {"family", std::string(to_string(id.family))},
              {"convention", id.convention},
              {"seed", id.seed}};
    if (!id.l.empty()) j["L"] = id.l;
    if (!id.h.empty()) j["H"] = id.h;
    if (!id.k.empty()) j["K"] = id.k;
    return j;
}

inline json to_json(const CaseReport& r) {
    json claims = json::array();
    for (const auto& c : r.claims) claims.push_back(to_json(c));
    json j = {{"case", to_json(r.id)}, {"claims", std::move(claims)}};
    if (r.seconds) j["seconds"] = *r.seconds;
    return j;
}

inline json report_to_json(std::span<const CaseReport> cases) {
    json arr = json::array();
    for (const auto& c : cases) arr.push_back(to_json(c));
    return arr;
}

inline std::string dump_report(std::span<const CaseReport> cases) { return report_to_json(cases).dump(2) + "\n"; }

}  // namespace radon::verify
