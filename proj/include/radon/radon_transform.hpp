#pragma once

// Radon transform and dual transform between coset spaces.
//
//   nested  (L subset of H):  R f(xH)  = sum_{hL in H/L} f(xhL) eta(hL)
//                             R* phi(xL) = phi(xH)
//   general (L = H cap K):    R f(xH)  = sum_{hL in H/L} f(xhK) eta(hL)
//                             R* phi(xK) = sum_{kL in K/L} phi(xkH) sigma(kL)
//
// Every sum is evaluated at all representatives of the target coset and the
// results compared, so well-definedness is checked on each call.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "radon/function_spaces.hpp"
#include "radon/linalg.hpp"

namespace radon {

namespace detail {

/// Evaluates  sum_i f(x * fiber_reps[i]) * weights[i]  for every coset xT of
/// the target space, at every representative x.
inline QuotientFunction fiber_sum(const QuotientFunction& f, const SpacePtr& target,
                                  std::span<const Element> fiber_reps, std::span<const Rational> weights,
                                  const char* who) {
    const FiniteGroup& g = target->group();
    std::vector<Rational> out(target->size());
    for (std::size_t c = 0; c < target->size(); ++c) {
        bool first = true;
        for (auto x : target->members(c)) {
            Rational acc = 0;
            for (std::size_t i = 0; i < fiber_reps.size(); ++i) acc += f.at_element(g.mul(x, fiber_reps[i])) * weights[i];
            if (first) {
                out[c] = acc;
                first = false;
            } else if (acc != out[c]) {
                throw ValidationError(std::string(who) + " is not well defined on coset " + std::to_string(c) + " of " +
                                      target->label());
            }
        }
    }
    return {target, std::move(out)};
}

}  // namespace detail

/// R_{L,H} f for f on G/L, with the invariant measure eta on H/L.
inline QuotientFunction radon_nested(const QuotientFunction& f, const Subgroup& h, const FiberMeasure& eta) {
    const Subgroup& l = f.space().subgroup();
    require_same_parent(l, h);
    if (!l.is_subset_of(h)) throw PreconditionError("radon_nested: " + l.label() + " is not contained in " + h.label());
    if (!(eta.outer() == h) || !(eta.inner() == l))
        throw SpaceMismatch("radon_nested: fiber measure is not on " + h.label() + "/" + l.label());
    return detail::fiber_sum(f, coset_space(h), eta.reps(), eta.weights(), "radon_nested");
}

inline QuotientFunction radon_nested(const QuotientFunction& f, const Subgroup& h,
                                     HaarConvention fiber = HaarConvention::normalized) {
    const Subgroup& l = f.space().subgroup();
    require_same_parent(l, h);
    if (!l.is_subset_of(h)) throw PreconditionError("radon_nested: " + l.label() + " is not contained in " + h.label());
    return radon_nested(f, h, invariant_fiber_measure(h, l, fiber));
}

/// R*_{L,H} phi = phi(xH) * sigma(L/L) with sigma the unit point mass.
inline QuotientFunction radon_dual_nested(const QuotientFunction& phi, const SpacePtr& fine) {
    const Subgroup& l = fine->subgroup();
    const Subgroup& h = phi.space().subgroup();
    require_same_parent(l, h);
    if (!l.is_subset_of(h))
        throw PreconditionError("radon_dual_nested: " + l.label() + " is not contained in " + h.label());
    const FiberMeasure sigma = invariant_fiber_measure(l, l, HaarConvention::normalized);
    const auto map = refine_projection(*fine, phi.space());
    std::vector<Rational> out(fine->size());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = phi[map[c]] * sigma.total();
    return {fine, std::move(out)};
}

/// R_{K,H} f for f on G/K, with eta invariant on H/L, L = H cap K.
inline QuotientFunction radon_general(const QuotientFunction& f, const Subgroup& h, const FiberMeasure& eta) {
    const Subgroup& k = f.space().subgroup();
    require_same_parent(k, h);
    const Subgroup l = intersect(h, k);
    if (!(eta.outer() == h) || !(eta.inner() == l))
        throw SpaceMismatch("radon_general: fiber measure is not on " + h.label() + "/" + l.label());
    return detail::fiber_sum(f, coset_space(h), eta.reps(), eta.weights(), "radon_general");
}

inline QuotientFunction radon_general(const QuotientFunction& f, const Subgroup& h,
                                      HaarConvention fiber = HaarConvention::normalized) {
    const Subgroup& k = f.space().subgroup();
    require_same_parent(k, h);
    return radon_general(f, h, invariant_fiber_measure(h, intersect(h, k), fiber));
}

/// R*_{K,H} phi for phi on G/H, with sigma invariant on K/L, L = H cap K.
inline QuotientFunction radon_dual_general(const QuotientFunction& phi, const Subgroup& k, const FiberMeasure& sigma) {
    const Subgroup& h = phi.space().subgroup();
    require_same_parent(k, h);
    const Subgroup l = intersect(h, k);
    if (!(sigma.outer() == k) || !(sigma.inner() == l))
        throw SpaceMismatch("radon_dual_general: fiber measure is not on " + k.label() + "/" + l.label());
    return detail::fiber_sum(phi, coset_space(k), sigma.reps(), sigma.weights(), "radon_dual_general");
}

inline QuotientFunction radon_dual_general(const QuotientFunction& phi, const Subgroup& k,
                                           HaarConvention fiber = HaarConvention::normalized) {
    const Subgroup& h = phi.space().subgroup();
    require_same_parent(k, h);
    return radon_dual_general(phi, k, invariant_fiber_measure(k, intersect(h, k), fiber));
}

/// The unique f in C(G/L : H) with radon_nested(f) == phi: the pullback of
/// phi along pi_{L,H}.
inline QuotientFunction reconstruct(const QuotientFunction& phi, const Subgroup& l) {
    const Subgroup& h = phi.space().subgroup();
    require_same_parent(l, h);
    if (!l.is_subset_of(h)) throw PreconditionError("reconstruct: " + l.label() + " is not contained in " + h.label());
    return pullback(phi, coset_space(l));
}

// ------------------------------------------------------------ operator matrices

struct SpaceId {
    std::string label;
    std::size_t dim = 0;

    friend bool operator==(const SpaceId&, const SpaceId&) = default;
};

/// Matrix of a linear operator between two function spaces, in the point
/// (or partition) bases named by the space identifiers.
struct OperatorMatrix {
    SpaceId domain;
    SpaceId codomain;
    RationalMatrix entries;

    OperatorMatrix(SpaceId dom, SpaceId cod, RationalMatrix m)
        : domain(std::move(dom)), codomain(std::move(cod)), entries(std::move(m)) {
        if (entries.rows() != codomain.dim || entries.cols() != domain.dim)
            throw SpaceMismatch("operator matrix shape does not match declared dimensions");
    }

    std::vector<Rational> apply(std::span<const Rational> v) const { return entries.apply(v); }
};

inline SpaceId space_id(const CosetSpace& s) { return {"C(" + s.label() + ")", s.size()}; }

inline SpaceId space_id(const InvariantSubspace& s) {
    return {"C(" + s.ambient().label() + " : " + s.stabilizer().label() + ")", s.dimension()};
}

/// Assembles the matrix column by column from the images of the domain's
/// unit vectors.
inline OperatorMatrix assemble_operator(SpaceId domain, SpaceId codomain,
                                        const std::function<std::vector<Rational>(const std::vector<Rational>&)>& op) {
    std::vector<std::vector<Rational>> columns;
    columns.reserve(domain.dim);
    for (std::size_t j = 0; j < domain.dim; ++j) {
        std::vector<Rational> e(domain.dim, Rational(0));
        e[j] = 1;
        columns.push_back(op(e));
    }
    const std::size_t rows = codomain.dim;
    return {std::move(domain), std::move(codomain), RationalMatrix::from_columns(rows, columns)};
}

/// Matrix of an operator on functions, in point bases of the two spaces.
inline OperatorMatrix function_operator(const SpacePtr& domain, const SpacePtr& codomain,
                                        const std::function<QuotientFunction(const QuotientFunction&)>& op) {
    return assemble_operator(space_id(*domain), space_id(*codomain), [&](const std::vector<Rational>& v) {
        QuotientFunction image = op(QuotientFunction(domain, v));
        require_same_space(image.space(), *codomain);
        return image.values();
    });
}

/// Matrix of op restricted to `domain`, in its partition basis. The
/// codomain is either a full coset space (point basis) or an invariant
/// subspace (partition basis); nullopt when some image leaves the codomain
/// subspace.
inline std::optional<OperatorMatrix> restricted_operator(const InvariantSubspace& domain,
                                                         const InvariantSubspace& codomain,
                                                         const std::function<QuotientFunction(const QuotientFunction&)>& op) {
    std::vector<std::vector<Rational>> columns;
    for (std::size_t b = 0; b < domain.dimension(); ++b) {
        auto coords = codomain.coordinates(op(domain.basis_vector(b)));
        if (!coords) return std::nullopt;
        columns.push_back(std::move(*coords));
    }
    return OperatorMatrix(space_id(domain), space_id(codomain),
                          RationalMatrix::from_columns(codomain.dimension(), columns));
}

inline OperatorMatrix restricted_operator(const InvariantSubspace& domain, const SpacePtr& codomain,
                                          const std::function<QuotientFunction(const QuotientFunction&)>& op) {
    std::vector<std::vector<Rational>> columns;
    for (std::size_t b = 0; b < domain.dimension(); ++b) {
        QuotientFunction image = op(domain.basis_vector(b));
        require_same_space(image.space(), *codomain);
        columns.push_back(image.values());
    }
    return {space_id(domain), space_id(*codomain), RationalMatrix::from_columns(codomain->size(), columns)};
}

/// Exact nullspace basis; dimension == domain dim - rank.
inline std::vector<std::vector<Rational>> kernel_basis(const OperatorMatrix& m) { return nullspace(m.entries); }

}  // namespace radon
