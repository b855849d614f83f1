#pragma once

#include <variant>

#include "radon/transport.hpp"

namespace radon {

struct NestedRadonOp {
    Subgroup l, h;
    HaarConvention fiber = HaarConvention::normalized;
};
struct NestedRadonDualOp {
    Subgroup l, h;
};
struct GeneralRadonOp {
    Subgroup k, h;
    HaarConvention fiber = HaarConvention::normalized;
};
struct GeneralRadonDualOp {
    Subgroup k, h;
    HaarConvention fiber = HaarConvention::normalized;
};
struct ProjectionPOp {
    Subgroup h;
    HaarConvention convention = HaarConvention::counting;
};
struct ProjectionTOp {
    RhoFunction rho;
    HaarConvention convention = HaarConvention::counting;
};
struct TauOp {
    ConjugacyWitness witness;
};
struct TransportOp {
    ConjugacyWitness witness;
};

using OperatorDescription = std::variant<NestedRadonOp, NestedRadonDualOp, GeneralRadonOp, GeneralRadonDualOp,
                                         ProjectionPOp, ProjectionTOp, TauOp, TransportOp>;

/// Matrix of the described operator in point bases (partition bases for
/// tau, whose domain is C(G : K)).
inline OperatorMatrix operator_matrix(const OperatorDescription& description) {
    struct Visitor {
        OperatorMatrix operator()(const NestedRadonOp& op) const {
            require_same_parent(op.l, op.h);
            if (!op.l.is_subset_of(op.h))
                throw PreconditionError("radon_nested: " + op.l.label() + " is not contained in " + op.h.label());
            const FiberMeasure eta = invariant_fiber_measure(op.h, op.l, op.fiber);
            return function_operator(coset_space(op.l), coset_space(op.h),
                                     [&](const QuotientFunction& f) { return radon_nested(f, op.h, eta); });
        }
        OperatorMatrix operator()(const NestedRadonDualOp& op) const {
            SpacePtr fine = coset_space(op.l);
            return function_operator(coset_space(op.h), fine,
                                     [&](const QuotientFunction& phi) { return radon_dual_nested(phi, fine); });
        }
        OperatorMatrix operator()(const GeneralRadonOp& op) const {
            const FiberMeasure eta = invariant_fiber_measure(op.h, intersect(op.h, op.k), op.fiber);
            return function_operator(coset_space(op.k), coset_space(op.h),
                                     [&](const QuotientFunction& f) { return radon_general(f, op.h, eta); });
        }
        OperatorMatrix operator()(const GeneralRadonDualOp& op) const {
            const FiberMeasure sigma = invariant_fiber_measure(op.k, intersect(op.h, op.k), op.fiber);
            return function_operator(coset_space(op.h), coset_space(op.k),
                                     [&](const QuotientFunction& phi) { return radon_dual_general(phi, op.k, sigma); });
        }
        OperatorMatrix operator()(const ProjectionPOp& op) const {
            return function_operator(trivial_space(op.h.parent()), coset_space(op.h), [&](const QuotientFunction& f) {
                return project_PH(as_group_function(f), op.h, op.convention);
            });
        }
        OperatorMatrix operator()(const ProjectionTOp& op) const {
            const Subgroup& h = op.rho.subgroup();
            return function_operator(trivial_space(h.parent()), coset_space(h), [&](const QuotientFunction& f) {
                return project_TH(as_group_function(f), op.rho, op.convention);
            });
        }
        OperatorMatrix operator()(const TauOp& op) const { return tau_matrix(op.witness); }
        OperatorMatrix operator()(const TransportOp& op) const { return transport_T_matrix(op.witness); }
    };
    return std::visit(Visitor{}, description);
}

}  // namespace radon
