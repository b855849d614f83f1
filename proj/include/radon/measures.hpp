#pragma once

// Haar measures, measures on coset spaces, and the quotient integral
// formulas relating them. All arithmetic is exact.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "radon/projections.hpp"

namespace radon {

struct HaarMeasure {
    GroupPtr group;
    HaarConvention convention;
    Rational weight;

    Rational integrate(const GroupFunction& f) const {
        Rational s = 0;
        for (const auto& v : f.values()) s += v;
        return s * weight;
    }
};

inline HaarMeasure haar_measure(GroupPtr g, HaarConvention c) {
    const Rational w = haar_weight(g->order(), c);
    return {std::move(g), c, w};
}

/// Modular function of G, computed from right translates of counting
/// measure. Identically 1 for a finite group.
inline std::vector<Rational> modular_function(const FiniteGroup& g) {
    std::vector<Element> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return detail::modular_on(g, all);
}

/// Positive point weights on a coset space.
class QuotientMeasure {
public:
    QuotientMeasure(SpacePtr space, std::vector<Rational> weights) : space_(std::move(space)), weights_(std::move(weights)) {
        if (weights_.size() != space_->size()) throw SpaceMismatch("measure needs one weight per coset");
        for (std::size_t c = 0; c < weights_.size(); ++c)
            if (weights_[c] <= 0) throw ValidationError("measure weight at coset " + std::to_string(c) + " is not positive");
    }

    const SpacePtr& space_ptr() const { return space_; }
    const CosetSpace& space() const { return *space_; }
    const Rational& operator[](std::size_t c) const { return weights_[c]; }
    const std::vector<Rational>& weights() const { return weights_; }
    Rational total() const { return sum(weights_); }

    /// G-invariance: mu(x . c) == mu(c) for all x and c.
    bool is_invariant() const {
        const FiniteGroup& g = space_->group();
        for (Element x = 0; x < g.order(); ++x)
            for (std::size_t c = 0; c < weights_.size(); ++c)
                if (weights_[space_->act(x, c)] != weights_[c]) return false;
        return true;
    }
    bool is_normalized() const { return total() == 1; }

    /// mu_x(E) = mu(xE), as point weights.
    QuotientMeasure translate(Element x) const {
        std::vector<Rational> w(weights_.size());
        for (std::size_t c = 0; c < w.size(); ++c) w[c] = weights_[space_->act(x, c)];
        return {space_, std::move(w)};
    }

    Rational integrate(const QuotientFunction& f) const {
        require_same_space(*space_, f.space());
        Rational s = 0;
        for (std::size_t c = 0; c < weights_.size(); ++c) s += f[c] * weights_[c];
        return s;
    }

private:
    SpacePtr space_;
    std::vector<Rational> weights_;
};

inline QuotientMeasure invariant_measure(SpacePtr space, HaarConvention c) {
    const std::size_t n = space->size();
    return {std::move(space), std::vector<Rational>(n, haar_weight(n, c))};
}

/// The measure mu on G/H for which
///   sum_G f(x) rho(x) dx == sum_{G/H} sum_H f(xh) dh dmu(xH)
/// holds for every f: mu(xH) = rho(x) * w_G / w_H.
inline QuotientMeasure measure_from_rho(const RhoFunction& rho, HaarConvention group_convention,
                                        HaarConvention subgroup_convention) {
    SpacePtr space = coset_space(rho.subgroup());
    const Rational wg = haar_weight(rho.group().order(), group_convention);
    const Rational wh = haar_weight(rho.subgroup().order(), subgroup_convention);
    std::vector<Rational> w(space->size());
    for (std::size_t c = 0; c < w.size(); ++c) w[c] = rho(space->rep(c)) * wg / wh;
    return {std::move(space), std::move(w)};
}

namespace detail {
inline void check_quotient_inputs(const GroupFunction& f, const RhoFunction& rho, const QuotientMeasure& mu) {
    if (f.group_ptr() != rho.subgroup().parent()) throw SpaceMismatch("function and rho live on different groups");
    if (!(mu.space().subgroup() == rho.subgroup())) throw SpaceMismatch("measure does not live on G/H of the rho-function");
}
}  // namespace detail

/// sum_G f dx - sum_{G/H} T_H f dmu. Zero for every f when
/// mu = measure_from_rho(rho) with the same conventions.
inline Rational verify_quotient_integral(const GroupFunction& f, const RhoFunction& rho, const QuotientMeasure& mu,
                                         HaarConvention group_convention = HaarConvention::counting,
                                         HaarConvention subgroup_convention = HaarConvention::counting) {
    detail::check_quotient_inputs(f, rho, mu);
    const Rational lhs = haar_measure(f.group_ptr(), group_convention).integrate(f);
    return lhs - mu.integrate(project_TH(f, rho, subgroup_convention));
}

/// sum_G f rho dx - sum_{G/H} P_H f dmu; the rho-weighted form of the same
/// identity.
inline Rational verify_rho_integral(const GroupFunction& f, const RhoFunction& rho, const QuotientMeasure& mu,
                                    HaarConvention group_convention = HaarConvention::counting,
                                    HaarConvention subgroup_convention = HaarConvention::counting) {
    detail::check_quotient_inputs(f, rho, mu);
    const GroupFunction weighted(f.group_ptr(), detail::pointwise_product(f.values(), rho.values()));
    const Rational lhs = haar_measure(f.group_ptr(), group_convention).integrate(weighted);
    return lhs - mu.integrate(project_PH(f, rho.subgroup(), subgroup_convention));
}

/// d(mu_x)/d(mu) at yH, i.e. rho(xy) / rho(y).
inline Rational radon_nikodym_ratio(const RhoFunction& rho, Element x, Element y) {
    return rho(rho.group().mul(x, y)) / rho(y);
}

/// Invariant measure on the fiber H/L of pi_{L,H}. Indexed by the cosets hL
/// contained in H, ordered by minimal representative.
class FiberMeasure {
public:
    FiberMeasure(Subgroup outer, Subgroup inner, std::vector<Rational> weights)
        : outer_(std::move(outer)), inner_(std::move(inner)), weights_(std::move(weights)) {
        require_same_parent(outer_, inner_);
        if (!inner_.is_subset_of(outer_))
            throw PreconditionError("fiber measure: " + inner_.label() + " is not contained in " + outer_.label());
        const CosetSpace fine(inner_);
        for (auto h : outer_.elements())
            if (std::find(reps_.begin(), reps_.end(), fine.rep(fine.coset_of(h))) == reps_.end())
                reps_.push_back(fine.rep(fine.coset_of(h)));
        std::sort(reps_.begin(), reps_.end());
        if (weights_.size() != reps_.size()) throw SpaceMismatch("fiber measure needs one weight per coset of H/L");
        for (const auto& w : weights_)
            if (w <= 0) throw ValidationError("fiber measure weights must be positive");
        // H acts transitively on H/L, so H-invariance means constant weights.
        if (std::any_of(weights_.begin(), weights_.end(), [&](const Rational& w) { return w != weights_.front(); }))
            throw ValidationError("fiber measure is not H-invariant");
    }

    const Subgroup& outer() const { return outer_; }
    const Subgroup& inner() const { return inner_; }
    /// Minimal representatives h of the cosets hL in H/L.
    const std::vector<Element>& reps() const { return reps_; }
    const std::vector<Rational>& weights() const { return weights_; }
    std::size_t size() const { return reps_.size(); }
    Rational total() const { return sum(weights_); }

private:
    Subgroup outer_;
    Subgroup inner_;
    std::vector<Element> reps_;
    std::vector<Rational> weights_;
};

/// Counting gives each point of H/L mass 1, normalized gives 1/[H:L].
inline FiberMeasure invariant_fiber_measure(const Subgroup& outer, const Subgroup& inner,
                                            HaarConvention c = HaarConvention::normalized) {
    require_same_parent(outer, inner);
    if (!inner.is_subset_of(outer))
        throw PreconditionError("fiber measure: " + inner.label() + " is not contained in " + outer.label());
    const std::size_t index = outer.order() / inner.order();
    return {outer, inner, std::vector<Rational>(index, haar_weight(index, c))};
}

}  // namespace radon
