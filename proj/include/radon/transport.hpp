#pragma once

// Transport between G/K and G/H for conjugate subgroups g0^-1 K g0 = H:
//   theta(gK) = g g0 H,   theta^-1(gH) = g g0^-1 K
//   tau: C(G : K) -> C(G : H),  (tau f)(x) = f(x g0^-1)
//   T = T_H o tau o T_K^-1,     (T phi)(xH) = phi(x g0^-1 K)

#include <optional>
#include <string>

#include "radon/radon_transform.hpp"

namespace radon {

class ConjugacyWitness {
public:
    static ConjugacyWitness make(Subgroup k, Subgroup h, Element g0) {
        require_same_parent(k, h);
        if (!(conjugate_subgroup(k, g0) == h))
            throw ValidationError("element " + std::to_string(g0) + " does not conjugate " + k.label() + " onto " +
                                  h.label());
        return ConjugacyWitness(std::move(k), std::move(h), g0);
    }

    static std::optional<ConjugacyWitness> find(const Subgroup& k, const Subgroup& h) {
        auto g0 = find_conjugator(k, h);
        if (!g0) return std::nullopt;
        return ConjugacyWitness(k, h, *g0);
    }

    Element g0() const { return g0_; }
    const Subgroup& k() const { return k_; }
    const Subgroup& h() const { return h_; }
    const FiniteGroup& group() const { return k_.group(); }
    const GroupPtr& group_ptr() const { return k_.parent(); }

private:
    ConjugacyWitness(Subgroup k, Subgroup h, Element g0) : g0_(g0), k_(std::move(k)), h_(std::move(h)) {}

    Element g0_;
    Subgroup k_;
    Subgroup h_;
};

/// gK -> g g0 H, on coset indices.
inline std::size_t theta(const ConjugacyWitness& w, std::size_t coset_k) {
    const CosetSpace gk(w.k()), gh(w.h());
    return gh.coset_of(w.group().mul(gk.rep(coset_k), w.g0()));
}

inline std::size_t theta_inverse(const ConjugacyWitness& w, std::size_t coset_h) {
    const CosetSpace gk(w.k()), gh(w.h());
    return gk.coset_of(w.group().mul(gh.rep(coset_h), w.group().inv(w.g0())));
}

namespace detail {
inline void require_right_invariant(const GroupFunction& f, const Subgroup& k, const char* who) {
    const FiniteGroup& g = f.group();
    for (Element x = 0; x < g.order(); ++x)
        for (auto y : k.elements())
            if (f[g.mul(x, y)] != f[x])
                throw ValidationError(std::string(who) + ": function is not right-" + k.label() + "-invariant");
}
}  // namespace detail

/// tau on C(G : K), as right translation by g0^-1.
inline GroupFunction tau(const ConjugacyWitness& w, const GroupFunction& f) {
    if (f.group_ptr() != w.group_ptr()) throw SpaceMismatch("tau: function lives on another group");
    detail::require_right_invariant(f, w.k(), "tau");
    const FiniteGroup& g = w.group();
    const Element g0inv = g.inv(w.g0());
    std::vector<Rational> out(g.order());
    for (Element x = 0; x < g.order(); ++x) out[x] = f[g.mul(x, g0inv)];
    return {f.group_ptr(), std::move(out)};
}

inline GroupFunction tau_inverse(const ConjugacyWitness& w, const GroupFunction& f) {
    if (f.group_ptr() != w.group_ptr()) throw SpaceMismatch("tau_inverse: function lives on another group");
    detail::require_right_invariant(f, w.h(), "tau_inverse");
    const FiniteGroup& g = w.group();
    std::vector<Rational> out(g.order());
    for (Element x = 0; x < g.order(); ++x) out[x] = f[g.mul(x, w.g0())];
    return {f.group_ptr(), std::move(out)};
}

/// tau from its definition: write f = phi o pi_K and return
/// phi o theta^-1 o pi_H.
inline GroupFunction tau_by_definition(const ConjugacyWitness& w, const GroupFunction& f) {
    detail::require_right_invariant(f, w.k(), "tau");
    const CosetSpace gk(w.k()), gh(w.h());
    std::vector<Rational> phi(gk.size());
    for (std::size_t c = 0; c < gk.size(); ++c) phi[c] = f[gk.rep(c)];
    std::vector<Rational> out(w.group().order());
    for (Element x = 0; x < out.size(); ++x) out[x] = phi[theta_inverse(w, gh.coset_of(x))];
    return {f.group_ptr(), std::move(out)};
}

/// (T phi)(xH) = phi(x g0^-1 K).
inline QuotientFunction transport_T(const ConjugacyWitness& w, const QuotientFunction& phi) {
    if (!(phi.space().subgroup() == w.k())) throw SpaceMismatch("transport_T: function is not on G/K");
    SpacePtr gh = coset_space(w.h());
    const FiniteGroup& g = w.group();
    const Element g0inv = g.inv(w.g0());
    std::vector<Rational> out(gh->size());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = phi.at_element(g.mul(gh->rep(c), g0inv));
    return {std::move(gh), std::move(out)};
}

/// T_K restricted to C(G : K) with rho == 1, in the partition basis of
/// C(G : K) and the point basis of C(G/K).
inline OperatorMatrix projection_T_matrix(const Subgroup& k, HaarConvention convention) {
    const InvariantSubspace domain = fixed_space_on_G(k.parent(), k);
    const RhoFunction rho = RhoFunction::constant(k);
    return restricted_operator(domain, coset_space(k), [&](const QuotientFunction& f) {
        return project_TH(as_group_function(f), rho, convention);
    });
}

/// tau in the partition bases of C(G : K) and C(G : H); a permutation
/// matrix.
inline OperatorMatrix tau_matrix(const ConjugacyWitness& w) {
    const InvariantSubspace domain = fixed_space_on_G(w.group_ptr(), w.k());
    const InvariantSubspace codomain = fixed_space_on_G(w.group_ptr(), w.h());
    auto m = restricted_operator(domain, codomain,
                                 [&](const QuotientFunction& f) { return as_quotient(tau(w, as_group_function(f))); });
    if (!m) throw ValidationError("tau image is not right-H-invariant");
    return *m;
}

inline OperatorMatrix transport_T_matrix(const ConjugacyWitness& w) {
    return function_operator(coset_space(w.k()), coset_space(w.h()),
                             [&](const QuotientFunction& phi) { return transport_T(w, phi); });
}

/// T_H . tau . T_K^-1 as an exact matrix product.
inline OperatorMatrix transport_T_composed(const ConjugacyWitness& w, HaarConvention convention) {
    const OperatorMatrix tk = projection_T_matrix(w.k(), convention);
    const OperatorMatrix th = projection_T_matrix(w.h(), convention);
    const OperatorMatrix t = tau_matrix(w);
    auto tk_inv = invert(tk.entries);
    if (!tk_inv) throw ValidationError("T_K is singular on C(G : K)");
    return {tk.codomain, th.codomain, th.entries * t.entries * *tk_inv};
}

inline bool is_permutation_matrix(const RationalMatrix& m) {
    if (!m.square()) return false;
    std::vector<int> col_hits(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            if (m(i, j) != 1) return false;
            ++row_hits;
            ++col_hits[j];
        }
        if (row_hits != 1) return false;
    }
    return std::all_of(col_hits.begin(), col_hits.end(), [](int c) { return c == 1; });
}

}  // namespace radon
