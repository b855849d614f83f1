#pragma once

// Runs the claim families over a corpus of groups and subgroup selections.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "radon/circle_example.hpp"
#include "radon/group_spec.hpp"
#include "radon/operators.hpp"
#include "radon/random.hpp"
#include "radon/report.hpp"
#include "radon/serialize.hpp"

namespace radon::verify {

using radon::to_string;

struct SuiteConfig {
    std::vector<std::string> groups = default_corpus();  ///< names, JSON files or inline JSON
    std::vector<Family> families{std::begin(kAllFamilies), std::end(kAllFamilies)};
    /// Explicit subgroup selections; unset roles range over all subgroups.
    std::optional<std::string> subgroup_l, subgroup_h, subgroup_k;
    HaarConvention convention = HaarConvention::counting;  ///< Haar convention on subgroups for P_H and T_H
    std::uint64_t seed = 1;
    std::size_t random_functions = 100;
    std::size_t random_rhos = 10;
    std::size_t example_radii = 100;
    std::size_t example_angles = 8;
    double example_tolerance = 1e-12;
    bool timing = false;
};

/// "e" | "G" | "gen:a,b,..." | "a,b,..." (optionally braced).
inline Subgroup parse_subgroup(const GroupPtr& g, std::string text) {
    if (text == "e" || text == "trivial") return Subgroup::trivial(g);
    if (text == "G" || text == "all") return Subgroup::whole(g);
    bool generated = false;
    if (text.rfind("gen:", 0) == 0) {
        generated = true;
        text.erase(0, 4);
    }
    if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
    std::vector<Element> elements;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string token = text.substr(pos, comma - pos);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw ValidationError("invalid subgroup specification '" + text + "'");
        elements.push_back(std::stoul(token));
        pos = comma + 1;
    }
    if (generated) return Subgroup::generated_by(g, elements);
    return Subgroup::from_elements(g, std::move(elements));
}

namespace detail {

inline json values_json(const QuotientFunction& f) { return rationals_to_json(f.values()); }
inline json values_json(const GroupFunction& f) { return rationals_to_json(f.values()); }

inline QuotientFunction random_function(RationalSource& rng, const SpacePtr& s) {
    return {s, rng.signed_vector(s->size())};
}

inline GroupFunction random_group_function(RationalSource& rng, const GroupPtr& g) {
    return {g, rng.signed_vector(g->order())};
}

/// Point indicators of G followed by `extra` random functions.
inline std::vector<GroupFunction> test_functions(RationalSource& rng, const GroupPtr& g, std::size_t extra,
                                                 bool nonnegative = false) {
    std::vector<GroupFunction> fs;
    for (Element x = 0; x < g->order(); ++x) fs.push_back(GroupFunction::indicator(g, x));
    for (std::size_t i = 0; i < extra; ++i)
        fs.emplace_back(g, nonnegative ? rng.nonnegative_vector(g->order()) : rng.signed_vector(g->order()));
    return fs;
}

inline std::string count_detail(std::size_t n, const char* what) { return "checked " + std::to_string(n) + " " + what; }

/// A rho-function with per-coset values drawn at random; nonconstant
/// whenever [G:H] > 1.
inline RhoFunction random_rho(RationalSource& rng, const Subgroup& h) {
    const std::size_t index = h.group().order() / h.order();
    std::vector<Rational> per_coset = rng.positive_vector(index);
    if (index > 1 && std::all_of(per_coset.begin(), per_coset.end(), [&](const Rational& v) { return v == per_coset[0]; }))
        per_coset[1] += 1;
    return RhoFunction::from_coset_values(h, per_coset);
}

// ------------------------------------------------------------------ measures

inline void measures_claims(CaseBuilder& b, const GroupPtr& g, const Subgroup& h, const SuiteConfig& cfg,
                            RationalSource& rng) {
    const HaarConvention gconv = HaarConvention::counting;
    const HaarConvention hconv = cfg.convention;

    b.claim("modular_function_trivial", [&]() -> Outcome {
        const auto delta = modular_function(*g);
        for (Element x = 0; x < g->order(); ++x) {
            if (delta[x] != 1) return {json{{"element", x}, {"delta", to_string(delta[x])}}, "", ""};
            for (Element y = 0; y < g->order(); ++y)
                if (delta[g->mul(x, y)] != delta[x] * delta[y]) return {json{{"x", x}, {"y", y}}, "not a homomorphism", ""};
        }
        return {std::nullopt, "Delta == 1 and multiplicative on all of G", ""};
    });

    const RhoFunction unit = RhoFunction::constant(h);
    std::vector<RhoFunction> rhos{unit};
    for (std::size_t i = 0; i < cfg.random_rhos; ++i) rhos.push_back(random_rho(rng, h));

    b.claim("unit_rho_measure_invariant", [&]() -> Outcome {
        const QuotientMeasure mu = measure_from_rho(unit, gconv, hconv);
        if (!mu.is_invariant()) return {json{{"weights", to_json(mu)}}, "", ""};
        return {std::nullopt, "mu from rho == 1 is G-invariant", ""};
    });

    auto integral_check = [&](const RhoFunction& rho, std::size_t extra) -> std::optional<json> {
        const QuotientMeasure mu = measure_from_rho(rho, gconv, hconv);
        for (const auto& f : test_functions(rng, g, extra)) {
            const Rational r1 = verify_quotient_integral(f, rho, mu, gconv, hconv);
            const Rational r2 = verify_rho_integral(f, rho, mu, gconv, hconv);
            if (r1 != 0 || r2 != 0)
                return json{{"f", values_json(f)}, {"rho", to_json(rho)}, {"residual_TH", to_string(r1)},
                            {"residual_rho", to_string(r2)}};
        }
        return std::nullopt;
    };

    b.claim("quotient_integral_unit_rho", [&]() -> Outcome {
        if (auto w = integral_check(unit, cfg.random_functions)) return {w, "", ""};
        return {std::nullopt, count_detail(g->order() + cfg.random_functions, "functions"), "0"};
    });

    b.claim("quotient_integral_random_rho", [&]() -> Outcome {
        for (std::size_t i = 1; i < rhos.size(); ++i)
            if (auto w = integral_check(rhos[i], 10)) return {w, "", ""};
        return {std::nullopt, count_detail(rhos.size() - 1, "rho-functions"), "0"};
    });

    b.claim("radon_nikodym_cocycle", [&]() -> Outcome {
        for (const auto& rho : rhos) {
            const QuotientMeasure mu = measure_from_rho(rho, gconv, hconv);
            const CosetSpace& s = mu.space();
            for (Element x = 0; x < g->order(); ++x) {
                const QuotientMeasure mux = mu.translate(x);
                for (Element y = 0; y < g->order(); ++y) {
                    const Rational ratio = radon_nikodym_ratio(rho, x, y);
                    const std::size_t c = s.coset_of(y);
                    if (ratio * mu[c] != mu[s.coset_of(g->mul(x, y))] || mux[c] != ratio * mu[c])
                        return {json{{"rho", to_json(rho)}, {"x", x}, {"y", y}, {"ratio", to_string(ratio)}}, "", ""};
                }
            }
        }
        return {std::nullopt, count_detail(rhos.size(), "rho-functions over all (x, y)"), ""};
    });

    b.claim("TH_l1_bound", [&]() -> Outcome {
        const Rational wg = haar_weight(g->order(), gconv);
        for (const auto& rho : rhos) {
            const QuotientMeasure mu = measure_from_rho(rho, gconv, hconv);
            auto fs = test_functions(rng, g, cfg.random_functions, true);
            for (const auto& f : test_functions(rng, g, cfg.random_functions / 10)) fs.push_back(f);
            for (const auto& f : fs) {
                const QuotientFunction t = project_TH(f, rho, hconv);
                Rational lhs = 0;
                for (std::size_t c = 0; c < t.size(); ++c) lhs += abs(t[c]) * mu[c];
                const Rational rhs = counting_l1(f) * wg;
                if (lhs > rhs)
                    return {json{{"f", values_json(f)}, {"rho", to_json(rho)}, {"lhs", to_string(lhs)},
                                 {"rhs", to_string(rhs)}},
                            "", ""};
            }
        }
        return {std::nullopt, "||T_H f||_{L1(mu)} <= ||f||_{L1(G)} for indicators and random f", ""};
    });

    b.claim("TH_surjective", [&]() -> Outcome {
        const std::size_t index = g->order() / h.order();
        for (const auto& rho : {rhos.front(), rhos.back()}) {
            const OperatorMatrix m = operator_matrix(ProjectionTOp{rho, hconv});
            if (rank(m.entries) != index) return {json{{"rho", to_json(rho)}, {"rank", rank(m.entries)}}, "", ""};
        }
        return {std::nullopt, "rank == [G:H]", ""};
    });

    b.claim("TH_equals_PH_for_unit_rho", [&]() -> Outcome {
        const OperatorMatrix t = operator_matrix(ProjectionTOp{unit, hconv});
        const OperatorMatrix p = operator_matrix(ProjectionPOp{h, hconv});
        if (!(t.entries == p.entries)) return {json{{"T_H", to_json(t)}, {"P_H", to_json(p)}}, "", ""};
        return {std::nullopt, "", ""};
    });
}

// --------------------------------------------------------------- projections

inline void projection_claims(CaseBuilder& b, const GroupPtr& g, const Subgroup& h, const SuiteConfig& cfg,
                              RationalSource& rng) {
    const HaarConvention conv = cfg.convention;
    const std::size_t index = g->order() / h.order();

    b.claim("PH_rank_kernel", [&]() -> Outcome {
        const OperatorMatrix p = operator_matrix(ProjectionPOp{h, conv});
        const std::size_t r = rank(p.entries);
        const auto kernel = kernel_basis(p);
        if (r != index || kernel.size() != g->order() - index)
            return {json{{"rank", r}, {"kernel_dim", kernel.size()}}, "", ""};
        for (const auto& v : kernel)
            for (const auto& x : p.apply(v))
                if (x != 0) return {json{{"kernel_vector", rationals_to_json(v)}}, "kernel vector not annihilated", ""};
        if (h.order() > 1 && kernel.empty()) return {json{{"kernel_dim", 0}}, "P_H injective with |H| > 1", ""};
        return {std::nullopt, "rank " + std::to_string(r) + ", kernel dim " + std::to_string(kernel.size()), ""};
    });

    b.claim("PstarP_is_convolution", [&]() -> Outcome {
        const auto mu = restriction_measure(h, conv);
        for (const auto& f : test_functions(rng, g, cfg.random_functions)) {
            const GroupFunction lhs = pullback(project_PH(f, h, conv));
            const GroupFunction rhs = convolve_measure(f, mu);
            if (!(lhs == rhs))
                return {json{{"f", values_json(f)}, {"PstarP", values_json(lhs)}, {"f_conv_mu", values_json(rhs)}}, "", ""};
        }
        return {std::nullopt, count_detail(g->order() + cfg.random_functions, "functions"), ""};
    });

    auto p_pstar = [&](HaarConvention c) {
        const OperatorMatrix p = operator_matrix(ProjectionPOp{h, c});
        SpacePtr gh = coset_space(h);
        const OperatorMatrix ps = function_operator(gh, trivial_space(g), [](const QuotientFunction& phi) {
            return as_quotient(pullback(phi));
        });
        return p.entries * ps.entries;
    };

    b.claim("PPstar_identity_normalized", [&]() -> Outcome {
        const RationalMatrix m = p_pstar(HaarConvention::normalized);
        if (!(m == RationalMatrix::identity(index))) return {json{{"product", rationals_to_json(m.data())}}, "", ""};
        return {std::nullopt, "", "0"};
    });

    b.claim("PPstar_counting_scaling", [&]() -> Outcome {
        const RationalMatrix m = p_pstar(HaarConvention::counting);
        RationalMatrix expected = RationalMatrix::identity(index);
        for (std::size_t i = 0; i < index; ++i) expected(i, i) = static_cast<long>(h.order());
        if (!(m == expected)) return {json{{"product", rationals_to_json(m.data())}}, "", ""};
        return {std::nullopt, "P_H P*_H == |H| id under counting measure", ""};
    });
}

// -------------------------------------------------------------- radon-nested

inline void nested_claims(CaseBuilder& b, const Subgroup& l, const Subgroup& h,
                          const SuiteConfig& cfg, RationalSource& rng) {
    const SpacePtr gl = coset_space(l), gh = coset_space(h);
    const InvariantSubspace s = invariant_subspace(gl, h);
    const OperatorMatrix r = operator_matrix(NestedRadonOp{l, h});
    const OperatorMatrix rs = operator_matrix(NestedRadonDualOp{l, h});

    b.claim("reconstruction_roundtrip", [&]() -> Outcome {
        for (const auto& f : s.basis()) {
            const QuotientFunction back = reconstruct(radon_nested(f, h), l);
            if (!(back == f)) return {json{{"f", values_json(f)}, {"reconstructed", values_json(back)}}, "", ""};
        }
        return {std::nullopt, count_detail(s.dimension(), "basis functions of C(G/L:H)"), "0"};
    });

    b.claim("reconstruction_right_inverse", [&]() -> Outcome {
        for (std::size_t c = 0; c < gh->size(); ++c) {
            const QuotientFunction phi = QuotientFunction::indicator(gh, c);
            const QuotientFunction back = radon_nested(reconstruct(phi, l), h);
            if (!(back == phi)) return {json{{"phi", values_json(phi)}, {"R_reconstruct", values_json(back)}}, "", ""};
        }
        return {std::nullopt, "", "0"};
    });

    b.claim("R_Rstar_identity", [&]() -> Outcome {
        const RationalMatrix m = r.entries * rs.entries;
        if (!(m == RationalMatrix::identity(gh->size()))) return {json{{"product", rationals_to_json(m.data())}}, "", ""};
        return {std::nullopt, "", "0"};
    });

    b.claim("Rstar_R_pullback", [&]() -> Outcome {
        for (std::size_t i = 0; i < cfg.random_functions; ++i) {
            const QuotientFunction f = random_function(rng, gl);
            const QuotientFunction rf = radon_nested(f, h);
            const QuotientFunction lhs = radon_dual_nested(rf, gl);
            std::vector<Rational> rhs(gl->size());
            for (std::size_t c = 0; c < gl->size(); ++c) rhs[c] = rf[gh->coset_of(gl->rep(c))];
            if (lhs.values() != rhs) return {json{{"f", values_json(f)}}, "", ""};
        }
        return {std::nullopt, count_detail(cfg.random_functions, "random functions"), "0"};
    });

    b.claim("rank_kernel_law", [&]() -> Outcome {
        const std::size_t rk = rank(r.entries);
        const auto kernel = kernel_basis(r);
        if (rk != gh->size() || kernel.size() != gl->size() - gh->size())
            return {json{{"rank", rk}, {"kernel_dim", kernel.size()}}, "", ""};
        for (const auto& v : kernel)
            for (const auto& x : r.apply(v))
                if (x != 0) return {json{{"kernel_vector", rationals_to_json(v)}}, "", ""};
        return {std::nullopt, "rank " + std::to_string(rk) + ", kernel dim " + std::to_string(kernel.size()), ""};
    });

    b.claim("module_property", [&]() -> Outcome {
        for (std::size_t i = 0; i < cfg.random_functions; ++i) {
            const QuotientFunction phi = random_function(rng, gh);
            const QuotientFunction f = random_function(rng, gl);
            const QuotientFunction lhs = radon_nested(pullback(phi, gl) * f, h);
            const QuotientFunction rhs = phi * radon_nested(f, h);
            if (!(lhs == rhs)) return {json{{"phi", values_json(phi)}, {"f", values_json(f)}}, "", ""};
        }
        return {std::nullopt, count_detail(cfg.random_functions, "random (phi, f) pairs"), "0"};
    });

    b.claim("support_containment", [&]() -> Outcome {
        const auto pi = refine_projection(*gl, *gh);
        for (std::size_t i = 0; i < cfg.random_functions; ++i) {
            std::vector<Rational> v = rng.signed_vector(gl->size());
            for (auto& x : v)
                if (rng.next(2) == 0) x = 0;
            const QuotientFunction f(gl, v);
            std::vector<char> image(gh->size(), 0);
            for (auto c : support(f)) image[pi[c]] = 1;
            for (auto c : support(radon_nested(f, h)))
                if (!image[c]) return {json{{"f", values_json(f)}, {"coset", c}}, "", ""};
        }
        return {std::nullopt, count_detail(cfg.random_functions, "sparse random functions"), ""};
    });

    b.claim("restricted_bijectivity", [&]() -> Outcome {
        const OperatorMatrix a = restricted_operator(s, gh, [&](const QuotientFunction& f) { return radon_nested(f, h); });
        if (!a.entries.square()) return {json{{"rows", a.entries.rows()}, {"cols", a.entries.cols()}}, "not square", ""};
        if (!invert(a.entries)) return {json{{"matrix", to_json(a)}}, "singular", ""};
        std::vector<std::vector<Rational>> columns;
        for (std::size_t c = 0; c < gh->size(); ++c) {
            auto coords = s.coordinates(reconstruct(QuotientFunction::indicator(gh, c), l));
            if (!coords) return {json{{"coset", c}}, "reconstruction left C(G/L:H)", ""};
            columns.push_back(std::move(*coords));
        }
        const RationalMatrix back = RationalMatrix::from_columns(s.dimension(), columns);
        const RationalMatrix id = RationalMatrix::identity(s.dimension());
        if (!(a.entries * back == id) || !(back * a.entries == id))
            return {json{{"R", to_json(a)}, {"reconstruct", rationals_to_json(back.data())}}, "not a two-sided inverse", ""};
        return {std::nullopt, "square " + std::to_string(s.dimension()) + "x" + std::to_string(s.dimension()), ""};
    });

    b.claim("trivial_L_is_PH", [&]() -> Outcome {
        if (!l.is_trivial()) return {std::nullopt, "not applicable: L is not trivial", ""};
        const OperatorMatrix rc = operator_matrix(NestedRadonOp{l, h, HaarConvention::counting});
        const OperatorMatrix p = operator_matrix(ProjectionPOp{h, HaarConvention::counting});
        if (!(rc.entries == p.entries)) return {json{{"R", to_json(rc)}, {"P_H", to_json(p)}}, "", ""};
        return {std::nullopt, "counting fiber measure gives P_H", ""};
    });

    b.claim("counting_fiber_scaling", [&]() -> Outcome {
        const OperatorMatrix rc = operator_matrix(NestedRadonOp{l, h, HaarConvention::counting});
        RationalMatrix expected = RationalMatrix::identity(gh->size());
        for (std::size_t i = 0; i < gh->size(); ++i) expected(i, i) = static_cast<long>(h.order() / l.order());
        if (!(rc.entries * rs.entries == expected)) return {json{{"R_counting", to_json(rc)}}, "", ""};
        return {std::nullopt, "R R* == [H:L] id under counting fiber measure", ""};
    });
}

// ------------------------------------------------------------------- algebra

inline void algebra_claims(CaseBuilder& b, const GroupPtr& g, const Subgroup& l, const Subgroup& h,
                           const SuiteConfig& cfg, RationalSource& rng) {
    const SpacePtr gl = coset_space(l), gh = coset_space(h);
    const InvariantSubspace s = invariant_subspace(gl, h);
    const QuotientFunction chi = chi_HL(gl, h);
    const Rational c = default_convolution_constant(h);
    const auto subgroups = all_subgroups(g);
    const std::size_t samples = std::max<std::size_t>(1, cfg.random_functions / 4);

    b.claim("invariant_subspace_dimension", [&]() -> Outcome {
        if (s.dimension() != gh->size()) return {json{{"dimension", s.dimension()}, {"index", gh->size()}}, "", ""};
        for (std::size_t i = 0; i < gh->size(); ++i) {
            const QuotientFunction p = pullback(QuotientFunction::indicator(gh, i), gl);
            auto coords = s.coordinates(p);
            if (!coords || std::count(coords->begin(), coords->end(), Rational(1)) != 1)
                return {json{{"coset", i}}, "pullback of a point indicator is not a basis vector", ""};
        }
        for (const auto& k : subgroups) {
            const std::size_t dim = invariant_subspace(gl, k).dimension();
            const std::size_t expected = g->order() / join(k, l).order();
            if (dim != expected) return {json{{"K", k.label()}, {"dimension", dim}, {"expected", expected}}, "", ""};
        }
        return {std::nullopt, "dim C(G/L:K) == [G:<K,L>] for every subgroup K", ""};
    });

    b.claim("pullback_membership", [&]() -> Outcome {
        for (std::size_t i = 0; i < samples; ++i) {
            const QuotientFunction phi = random_function(rng, gh);
            if (!membership(pullback(phi, gl), s)) return {json{{"phi", values_json(phi)}}, "pullback", ""};
            const QuotientFunction f = random_function(rng, gl);
            if (!membership(s.average(f), s)) return {json{{"f", values_json(f)}}, "fiber average", ""};
        }
        for (const auto& v : s.basis())
            if (!membership(v, s)) return {json{{"basis_vector", values_json(v)}}, "", ""};
        if (h.order() > l.order() && membership(QuotientFunction::indicator(gl, 0), s))
            return {json{{"coset", 0}}, "single-coset indicator accepted with [H:L] > 1", ""};
        return {std::nullopt, "", ""};
    });

    b.claim("chi_HL_membership", [&]() -> Outcome {
        if (!membership(chi, s)) return {json{{"chi", values_json(chi)}}, "", ""};
        return {std::nullopt, "", ""};
    });

    b.claim("left_ideal", [&]() -> Outcome {
        for (std::size_t i = 0; i < samples; ++i) {
            const QuotientFunction f = random_function(rng, gl);
            const QuotientFunction gfn = s.expand(rng.signed_vector(s.dimension()));
            const QuotientFunction prod = convolve(f, gfn, c);
            if (!membership(prod, s)) return {json{{"f", values_json(f)}, {"g", values_json(gfn)}}, "", ""};
        }
        return {std::nullopt, count_detail(samples, "random pairs"), ""};
    });

    b.claim("right_unit", [&]() -> Outcome {
        std::vector<QuotientFunction> fs = s.basis();
        for (std::size_t i = 0; i < samples; ++i) fs.push_back(s.expand(rng.signed_vector(s.dimension())));
        for (const auto& f : fs) {
            const QuotientFunction out = convolve(f, chi, c);
            if (!(out == f)) return {json{{"f", values_json(f)}, {"f_conv_chi", values_json(out)}}, "", ""};
        }
        return {std::nullopt, "f * chi_{H/L} == f with c = 1/|H|", "0"};
    });

    b.claim("left_unit", [&]() -> Outcome {
        for (const auto& f : s.basis()) {
            const QuotientFunction out = convolve(chi, f, c);
            if (!(out == f)) return {json{{"f", values_json(f)}, {"chi_conv_f", values_json(out)}}, "", ""};
        }
        return {std::nullopt, "chi_{H/L} * f == f on the partition basis", ""};
    });

    b.claim("subspace_equal_restricted", [&]() -> Outcome {
        for (const auto& k : subgroups) {
            if (!l.is_subset_of(k)) continue;
            const bool eq = subspace_equal(s, invariant_subspace(gl, k));
            if (eq != (k == h)) return {json{{"K", k.label()}, {"equal", eq}}, "", ""};
        }
        return {std::nullopt, "C(G/L:H) == C(G/L:K) iff H == K, for K containing L", ""};
    });

    b.claim("subspace_equal_unrestricted", [&]() -> Outcome {
        for (const auto& k : subgroups) {
            const bool eq = subspace_equal(s, invariant_subspace(gl, k));
            if (eq != (k == h))
                return {json{{"K", k.label()}, {"equal", eq}, {"partition_H", to_json(s)},
                             {"partition_K", to_json(invariant_subspace(gl, k))}},
                        "C(G/L:H) == C(G/L:K) with H != K", ""};
        }
        return {std::nullopt, "iff holds for every subgroup K", ""};
    });
}

// ------------------------------------------------------------- radon-general

inline void general_claims(CaseBuilder& b, const GroupPtr& g, const Subgroup& k, const Subgroup& h,
                           const SuiteConfig& cfg, RationalSource& rng) {
    const Subgroup l = intersect(h, k);
    const SpacePtr gk = coset_space(k), gh = coset_space(h), gl = coset_space(l);
    const InvariantSubspace skh = invariant_subspace(gk, h);  // C(G/K : H)
    const InvariantSubspace shk = invariant_subspace(gh, k);  // C(G/H : K)
    const std::size_t samples = std::max<std::size_t>(1, cfg.random_functions / 10);
    auto r = [&](const QuotientFunction& f) { return radon_general(f, h); };
    auto rs = [&](const QuotientFunction& phi) { return radon_dual_general(phi, k); };

    std::optional<OperatorMatrix> full;
    b.claim("well_defined", [&]() -> Outcome {
        full = operator_matrix(GeneralRadonOp{k, h});
        (void)operator_matrix(GeneralRadonDualOp{k, h});
        return {std::nullopt, "R and R* agree across all coset representatives", ""};
    });

    b.claim("restricted_bijective", [&]() -> Outcome {
        auto a = restricted_operator(skh, shk, r);
        if (!a) return {json{{"K", k.label()}}, "image leaves C(G/H:K)", ""};
        if (!a->entries.square() || !invert(a->entries)) return {json{{"matrix", to_json(*a)}}, "", ""};
        return {std::nullopt, "square invertible " + std::to_string(skh.dimension()) + "x" + std::to_string(shk.dimension()), ""};
    });

    std::vector<QuotientFunction> fs = skh.basis();
    for (std::size_t i = 0; i < samples; ++i) fs.push_back(skh.expand(rng.signed_vector(skh.dimension())));

    b.claim("pointwise_identity", [&]() -> Outcome {
        for (const auto& f : fs) {
            const QuotientFunction rf = r(f);
            for (Element x = 0; x < g->order(); ++x)
                if (rf.at_element(x) != f.at_element(x)) return {json{{"f", values_json(f)}, {"x", x}}, "", ""};
        }
        return {std::nullopt, "R f(xH) == f(xK) on C(G/K:H)", ""};
    });

    b.claim("pullback_identity", [&]() -> Outcome {
        for (const auto& f : fs) {
            const QuotientFunction lhs = pullback(r(f), gl);
            const QuotientFunction rhs = pullback(f, gl);
            if (!(lhs == rhs)) return {json{{"f", values_json(f)}, {"lhs", values_json(lhs)}, {"rhs", values_json(rhs)}}, "", ""};
        }
        return {std::nullopt, count_detail(fs.size(), "functions on every G/L coset"), "0"};
    });

    b.claim("dual_restricted_bijective", [&]() -> Outcome {
        auto a = restricted_operator(shk, skh, rs);
        if (!a) return {json{{"H", h.label()}}, "image leaves C(G/K:H)", ""};
        if (!a->entries.square() || !invert(a->entries)) return {json{{"matrix", to_json(*a)}}, "", ""};
        for (const auto& phi : shk.basis()) {
            const QuotientFunction out = rs(phi);
            for (Element x = 0; x < g->order(); ++x)
                if (out.at_element(x) != phi.at_element(x)) return {json{{"phi", values_json(phi)}, {"x", x}}, "", ""};
        }
        return {std::nullopt, "R* phi(xK) == phi(xH) on C(G/H:K)", ""};
    });

    b.claim("nested_consistency", [&]() -> Outcome {
        if (!k.is_subset_of(h)) return {std::nullopt, "not applicable: K is not contained in H", ""};
        const OperatorMatrix nested = operator_matrix(NestedRadonOp{k, h});
        const OperatorMatrix general = full ? *full : operator_matrix(GeneralRadonOp{k, h});
        if (!(nested.entries == general.entries)) return {json{{"nested", to_json(nested)}, {"general", to_json(general)}}, "", ""};
        return {std::nullopt, "R_{K,H} == R_{L,H} with L = K", ""};
    });
}

// ----------------------------------------------------------------- transport

inline void transport_claims(CaseBuilder& b, const GroupPtr& g, const ConjugacyWitness& w, const SuiteConfig& cfg,
                             RationalSource& rng) {
    const Subgroup& k = w.k();
    const Subgroup& h = w.h();
    const SpacePtr gk = coset_space(k), gh = coset_space(h);
    const InvariantSubspace fk = fixed_space_on_G(g, k);
    const Element g0 = w.g0(), g0inv = g->inv(g0);

    b.claim("witness_valid", [&]() -> Outcome {
        if (!(conjugate_subgroup(k, g0) == h)) return {json{{"g0", g0}}, "g0^-1 K g0 != H", ""};
        if (!(conjugate_subgroup(conjugate_subgroup(k, g0), g0inv) == k)) return {json{{"g0", g0}}, "round trip", ""};
        return {std::nullopt, "g0 = " + std::to_string(g0), ""};
    });

    b.claim("theta_bijective_equivariant", [&]() -> Outcome {
        for (std::size_t c = 0; c < gk->size(); ++c) {
            if (theta_inverse(w, theta(w, c)) != c) return {json{{"coset_K", c}}, "theta^-1 theta != id", ""};
            for (Element x = 0; x < g->order(); ++x)
                if (theta(w, gk->act(x, c)) != gh->act(x, theta(w, c)))
                    return {json{{"coset_K", c}, {"x", x}}, "not G-equivariant", ""};
        }
        for (std::size_t c = 0; c < gh->size(); ++c)
            if (theta(w, theta_inverse(w, c)) != c) return {json{{"coset_H", c}}, "theta theta^-1 != id", ""};
        return {std::nullopt, "", ""};
    });

    b.claim("tau_permutation", [&]() -> Outcome {
        const OperatorMatrix t = tau_matrix(w);
        if (!is_permutation_matrix(t.entries)) return {json{{"tau", to_json(t)}}, "", ""};
        return {std::nullopt, "", ""};
    });

    std::vector<GroupFunction> fs;
    for (const auto& v : fk.basis()) fs.push_back(as_group_function(v));
    for (std::size_t i = 0; i < cfg.random_functions; ++i)
        fs.push_back(as_group_function(fk.expand(rng.signed_vector(fk.dimension()))));

    b.claim("tau_matches_definition", [&]() -> Outcome {
        for (const auto& f : fs) {
            const GroupFunction t = tau(w, f);
            if (!(t == tau_by_definition(w, f)) || !(tau_inverse(w, t) == f))
                return {json{{"f", values_json(f)}, {"tau_f", values_json(t)}}, "", ""};
        }
        return {std::nullopt, count_detail(fs.size(), "functions in C(G:K)"), ""};
    });

    b.claim("tau_norms_preserved", [&]() -> Outcome {
        for (const auto& f : fs) {
            const GroupFunction t = tau(w, f);
            if (sup_norm(t) != sup_norm(f) || counting_l1(t) != counting_l1(f))
                return {json{{"f", values_json(f)}}, "", ""};
        }
        return {std::nullopt, "sup and counting-L1 norms preserved with equality", ""};
    });

    b.claim("T_matrix_product", [&]() -> Outcome {
        const OperatorMatrix t = transport_T_matrix(w);
        for (auto conv : {HaarConvention::normalized, HaarConvention::counting}) {
            const OperatorMatrix composed = transport_T_composed(w, conv);
            if (!(composed.entries == t.entries))
                return {json{{"T", to_json(t)}, {"T_H_tau_T_K_inv", to_json(composed)},
                             {"convention", std::string(to_string(conv))}},
                        "", ""};
        }
        return {std::nullopt, "T == T_H tau T_K^-1 under both conventions", "0"};
    });

    std::vector<QuotientFunction> phis;
    for (std::size_t c = 0; c < gk->size(); ++c) phis.push_back(QuotientFunction::indicator(gk, c));
    for (std::size_t i = 0; i < cfg.random_functions; ++i) phis.push_back(random_function(rng, gk));

    b.claim("T_closed_form", [&]() -> Outcome {
        for (const auto& phi : phis) {
            const QuotientFunction t = transport_T(w, phi);
            for (Element x = 0; x < g->order(); ++x)
                if (t[gh->coset_of(x)] != phi[gk->coset_of(g->mul(x, g0inv))])
                    return {json{{"phi", values_json(phi)}, {"x", x}}, "", ""};
        }
        return {std::nullopt, count_detail(phis.size(), "functions at every x"), ""};
    });

    b.claim("T_bijective_rank", [&]() -> Outcome {
        const std::size_t rk = rank(transport_T_matrix(w).entries);
        if (rk != gk->size() || rk != gh->size()) return {json{{"rank", rk}}, "", ""};
        return {std::nullopt, "rank == [G:K] == [G:H] == " + std::to_string(rk), ""};
    });

    b.claim("T_multiplicative", [&]() -> Outcome {
        for (std::size_t i = 0; i < cfg.random_functions; ++i) {
            const QuotientFunction a = random_function(rng, gk), bb = random_function(rng, gk);
            if (!(transport_T(w, a * bb) == transport_T(w, a) * transport_T(w, bb)))
                return {json{{"phi", values_json(a)}, {"psi", values_json(bb)}}, "", ""};
        }
        return {std::nullopt, count_detail(cfg.random_functions, "random pairs"), ""};
    });

    b.claim("T_convolution_multiplicative", [&]() -> Outcome {
        const Rational ck = default_convolution_constant(k), ch = default_convolution_constant(h);
        for (std::size_t i = 0; i < std::max<std::size_t>(1, cfg.random_functions / 10); ++i) {
            const QuotientFunction a = random_function(rng, gk), bb = random_function(rng, gk);
            const QuotientFunction lhs = transport_T(w, convolve(a, bb, ck));
            const QuotientFunction rhs = convolve(transport_T(w, a), transport_T(w, bb), ch);
            if (!(lhs == rhs))
                return {json{{"phi", values_json(a)}, {"psi", values_json(bb)}, {"T_conv", values_json(lhs)},
                             {"conv_T", values_json(rhs)}},
                        "T(phi * psi) != T phi * T psi for the lift convolution", ""};
        }
        return {std::nullopt, "T preserved the lift convolution on all sampled pairs", ""};
    });
}

// ------------------------------------------------------------------- example

inline void example_claims(CaseBuilder& b, const SuiteConfig& cfg) {
    using namespace radon::circle;
    const RadialFunction phi = tent_phi();
    const auto grid = standard_grid(cfg.example_radii, cfg.example_angles);
    const ExampleReport report = verify_example(grid, cfg.example_tolerance);
    auto fmt = [](double x) {
        std::ostringstream os;
        os.precision(17);
        os << x;
        return os.str();
    };

    b.claim("tent_phi_values", [&]() -> Outcome {
        if (phi(0.5) != 0.5 || phi(1.0) != 0.0 || phi(2.0) != 0.0)
            return {json{{"phi(0.5)", phi(0.5)}, {"phi(1)", phi(1.0)}, {"phi(2)", phi(2.0)}}, "", ""};
        return {std::nullopt, "phi(0.5) = 0.5, phi(1) = 0, phi(2) = 0", ""};
    });

    b.claim("example_f_half", [&]() -> Outcome {
        const double a = example_f(phi, {0.5, 0.0}), bi = example_f(phi, {0.0, 0.5}), c = example_f(phi, {1.5, 0.0});
        if (a != 1.0 || bi != 1.0 || c != 0.0) return {json{{"f(0.5)", a}, {"f(0.5i)", bi}, {"f(1.5)", c}}, "", ""};
        return {std::nullopt, "f(0.5 L) = 2 phi(0.5) = 1", ""};
    });

    b.claim("membership_invariance", [&]() -> Outcome {
        if (!(report.max_invariance_deviation < cfg.example_tolerance))
            return {json{{"max_invariance_deviation", report.max_invariance_deviation}}, "", ""};
        return {std::nullopt, count_detail(grid.size(), "samples"), fmt(report.max_invariance_deviation)};
    });

    b.claim("reconstruction_identity", [&]() -> Outcome {
        if (!(report.max_deviation < cfg.example_tolerance)) return {json{{"max_deviation", report.max_deviation}}, "", ""};
        return {std::nullopt, "max |R f - f| < " + fmt(cfg.example_tolerance), fmt(report.max_deviation)};
    });

    b.claim("support_vanishes", [&]() -> Outcome {
        for (const auto& row : report.rows)
            if (row.r >= 1.0 && row.rf != 0.0) return {json{{"r", row.r}, {"angle", row.angle}, {"Rf", row.rf}}, "", ""};
        return {std::nullopt, "R f == 0 for |z| >= 1", ""};
    });
}

}  // namespace detail

struct SuiteResult {
    std::vector<CaseReport> cases;

    bool any_failure() const {
        return std::any_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.failed(); });
    }
    std::string json_text() const { return dump_report(cases); }
};

inline SuiteResult run_suite(const SuiteConfig& cfg) {
    SuiteResult result;
    const std::string conv(to_string(cfg.convention));

    auto run_case = [&](CaseId id, const std::function<void(CaseBuilder&, RationalSource&)>& body) {
        id.convention = conv;
        id.seed = derive_seed(cfg.seed, id.label());
        RationalSource rng(id.seed);
        const auto start = std::chrono::steady_clock::now();
        CaseBuilder b(id);
        body(b, rng);
        std::optional<double> seconds;
        if (cfg.timing)
            seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.cases.push_back(b.finish(seconds));
    };

    for (Family family : cfg.families) {
        if (family == Family::example) {
            CaseId id{"C^x", family, "{1,-1}", "{1,i,-1,-i}", "", "", 0};
            run_case(id, [&](CaseBuilder& b, RationalSource&) { detail::example_claims(b, cfg); });
            continue;
        }
        for (const auto& source : cfg.groups) {
            const GroupPtr g = share(load_group(source));
            const auto subgroups = all_subgroups(g);
            auto candidates = [&](const std::optional<std::string>& spec) {
                return spec ? std::vector<Subgroup>{parse_subgroup(g, *spec)} : subgroups;
            };
            const auto ls = candidates(cfg.subgroup_l);
            const auto hs = candidates(cfg.subgroup_h);
            const auto ks = candidates(cfg.subgroup_k);

            switch (family) {
                case Family::measures:
                case Family::projections:
                    for (const auto& h : hs) {
                        CaseId id{g->name(), family, "", h.label(), "", "", 0};
                        run_case(id, [&](CaseBuilder& b, RationalSource& rng) {
                            if (family == Family::measures) detail::measures_claims(b, g, h, cfg, rng);
                            else detail::projection_claims(b, g, h, cfg, rng);
                        });
                    }
                    break;
                case Family::radon_nested:
                case Family::algebra: {
                    const bool explicit_pair = cfg.subgroup_l && cfg.subgroup_h;
                    for (const auto& h : hs)
                        for (const auto& l : ls) {
                            const bool nested = l.is_subset_of(h);
                            if (!nested && !explicit_pair) continue;
                            CaseId id{g->name(), family, l.label(), h.label(), "", "", 0};
                            run_case(id, [&](CaseBuilder& b, RationalSource& rng) {
                                if (!nested) b.precondition_violation("L " + l.label() + " is not contained in H " + h.label());
                                else if (family == Family::radon_nested) detail::nested_claims(b, l, h, cfg, rng);
                                else detail::algebra_claims(b, g, l, h, cfg, rng);
                            });
                        }
                    break;
                }
                case Family::radon_general:
                    for (const auto& k : ks)
                        for (const auto& h : hs) {
                            CaseId id{g->name(), family, intersect(h, k).label(), h.label(), k.label(), "", 0};
                            run_case(id, [&](CaseBuilder& b, RationalSource& rng) {
                                detail::general_claims(b, g, k, h, cfg, rng);
                            });
                        }
                    break;
                case Family::transport: {
                    const bool explicit_pair = cfg.subgroup_k && cfg.subgroup_h;
                    for (const auto& k : ks)
                        for (const auto& h : hs) {
                            auto w = ConjugacyWitness::find(k, h);
                            if (!w && !explicit_pair) continue;
                            CaseId id{g->name(), family, "", h.label(), k.label(), "", 0};
                            run_case(id, [&](CaseBuilder& b, RationalSource& rng) {
                                if (!w) b.precondition_violation("K " + k.label() + " and H " + h.label() + " are not conjugate");
                                else detail::transport_claims(b, g, *w, cfg, rng);
                            });
                        }
                    break;
                }
                case Family::example: break;
            }
        }
    }
    return result;
}

}  // namespace radon::verify
