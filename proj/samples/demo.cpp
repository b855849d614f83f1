// Build the Radon transform on S3 from G/{e} to G/<(12)>, reconstruct an
// invariant function from its transform, and print the matrices.

#include <iostream>

#include "radon/radon.hpp"

int main() {
    using namespace radon;
    const GroupPtr s3 = share(symmetric(3));
    const Subgroup l = Subgroup::trivial(s3);
    const Subgroup h = Subgroup::generated_by(s3, std::vector<Element>{2});

    const OperatorMatrix r = operator_matrix(NestedRadonOp{l, h});
    std::cout << "R  " << r.domain.label << " -> " << r.codomain.label << "\n" << to_csv(r);
    std::cout << "rank " << rank(r.entries) << ", kernel dimension " << kernel_basis(r).size() << "\n";

    const SpacePtr gl = coset_space(l);
    const InvariantSubspace s = invariant_subspace(gl, h);
    const QuotientFunction f = s.expand(std::vector<Rational>{Rational(1, 2), Rational(-3), Rational(7, 4)});
    const QuotientFunction rf = radon_nested(f, h);
    std::cout << "f    " << to_csv(f.values());
    std::cout << "R f  " << to_csv(rf.values());
    std::cout << "back " << to_csv(reconstruct(rf, l).values());
}
