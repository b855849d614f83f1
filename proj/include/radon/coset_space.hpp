#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "radon/group.hpp"

namespace radon {

/// Left cosets G/H. Coset indices follow the order of their canonical
/// representatives, which are the minimal element index of each coset;
/// coset_of realizes the canonical projection G -> G/H.
class CosetSpace {
public:
    explicit CosetSpace(Subgroup subgroup) : subgroup_(std::move(subgroup)) {
        const FiniteGroup& g = subgroup_.group();
        constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
        coset_of_.assign(g.order(), unassigned);
        for (Element x = 0; x < g.order(); ++x) {
            if (coset_of_[x] != unassigned) continue;
            const std::size_t c = reps_.size();
            reps_.push_back(x);
            std::vector<Element> members;
            members.reserve(subgroup_.order());
            for (auto h : subgroup_.elements()) {
                const Element y = g.mul(x, h);
                coset_of_[y] = c;
                members.push_back(y);
            }
            std::sort(members.begin(), members.end());
            members_.push_back(std::move(members));
        }
    }

    const FiniteGroup& group() const { return subgroup_.group(); }
    const GroupPtr& group_ptr() const { return subgroup_.parent(); }
    const Subgroup& subgroup() const { return subgroup_; }

    /// Number of cosets, i.e. the index [G : H].
    std::size_t size() const { return reps_.size(); }
    Element rep(std::size_t c) const { return reps_[c]; }
    const std::vector<Element>& reps() const { return reps_; }
    std::size_t coset_of(Element x) const { return coset_of_[x]; }
    const std::vector<std::size_t>& projection() const { return coset_of_; }
    const std::vector<Element>& members(std::size_t c) const { return members_[c]; }

    /// Left action x . (yH) = (xy)H.
    std::size_t act(Element x, std::size_t c) const { return coset_of_[group().mul(x, reps_[c])]; }

    std::string label() const { return group().name() + "/" + subgroup_.label(); }

    friend bool operator==(const CosetSpace& a, const CosetSpace& b) { return a.subgroup_ == b.subgroup_; }

private:
    Subgroup subgroup_;
    std::vector<Element> reps_;
    std::vector<std::size_t> coset_of_;
    std::vector<std::vector<Element>> members_;
};

using SpacePtr = std::shared_ptr<const CosetSpace>;

inline SpacePtr coset_space(const Subgroup& h) { return std::make_shared<const CosetSpace>(h); }

/// G viewed as G/{e}; coset index == element index.
inline SpacePtr trivial_space(const GroupPtr& g) { return coset_space(Subgroup::trivial(g)); }

inline void require_same_space(const CosetSpace& a, const CosetSpace& b) {
    if (!(a == b)) throw SpaceMismatch("space mismatch: " + a.label() + " vs " + b.label());
}

/// pi_{L,H}: G/L -> G/H, xL -> xH, as a table indexed by G/L coset.
/// Requires L to be a subgroup of H.
inline std::vector<std::size_t> refine_projection(const CosetSpace& fine, const CosetSpace& coarse) {
    require_same_parent(fine.subgroup(), coarse.subgroup());
    if (!fine.subgroup().is_subset_of(coarse.subgroup()))
        throw PreconditionError("refine_projection: " + fine.subgroup().label() + " is not contained in " +
                                coarse.subgroup().label());
    std::vector<std::size_t> map(fine.size());
    for (std::size_t c = 0; c < fine.size(); ++c) map[c] = coarse.coset_of(fine.rep(c));
    return map;
}

inline std::vector<std::size_t> refine_projection(const Subgroup& l, const Subgroup& h) {
    return refine_projection(CosetSpace(l), CosetSpace(h));
}

}  // namespace radon
