#pragma once

// The coset-sum operators P_H and T_H from C(G) to C(G/H), and pullbacks
// along the canonical projections.

#include "radon/function.hpp"
#include "radon/rho.hpp"

namespace radon {

/// (P_H f)(xH) = sum_{h in H} f(xh) * w_H.
inline QuotientFunction project_PH(const GroupFunction& f, const Subgroup& h, HaarConvention convention) {
    if (f.group_ptr() != h.parent()) throw SpaceMismatch("project_PH: function and subgroup live on different groups");
    SpacePtr space = coset_space(h);
    const FiniteGroup& g = f.group();
    const Rational w = haar_weight(h.order(), convention);
    std::vector<Rational> out(space->size());
    for (std::size_t c = 0; c < space->size(); ++c) {
        Rational acc = 0;
        for (auto k : h.elements()) acc += f[g.mul(space->rep(c), k)];
        out[c] = acc * w;
    }
    return {std::move(space), std::move(out)};
}

/// (T_H f)(xH) = sum_{h in H} f(xh) / rho(xh) * w_H.
inline QuotientFunction project_TH(const GroupFunction& f, const RhoFunction& rho, HaarConvention convention) {
    const Subgroup& h = rho.subgroup();
    if (f.group_ptr() != h.parent()) throw SpaceMismatch("project_TH: function and rho live on different groups");
    SpacePtr space = coset_space(h);
    const FiniteGroup& g = f.group();
    const Rational w = haar_weight(h.order(), convention);
    std::vector<Rational> out(space->size());
    for (std::size_t c = 0; c < space->size(); ++c) {
        Rational acc = 0;
        for (auto k : h.elements()) {
            const Element y = g.mul(space->rep(c), k);
            acc += f[y] / rho(y);
        }
        out[c] = acc * w;
    }
    return {std::move(space), std::move(out)};
}

/// phi o pi_H, a function on G. This is P*_H.
inline GroupFunction pullback(const QuotientFunction& phi) {
    const CosetSpace& s = phi.space();
    std::vector<Rational> out(s.group().order());
    for (Element x = 0; x < out.size(); ++x) out[x] = phi[s.coset_of(x)];
    return {s.group_ptr(), std::move(out)};
}

/// phi o pi_{L,H}, a function on G/L. This is the nested dual transform R*.
inline QuotientFunction pullback(const QuotientFunction& phi, const SpacePtr& fine) {
    const auto map = refine_projection(*fine, phi.space());
    std::vector<Rational> out(fine->size());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = phi[map[c]];
    return {fine, std::move(out)};
}

}  // namespace radon
