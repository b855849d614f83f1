#pragma once

// Invariant subspaces C(G/L : H), C(G : K), the lift convolution on C(G/L),
// and convolution with measures on G.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "radon/measures.hpp"

namespace radon {

/// {f on G/L : f(xhL) = f(xL) for all x in G, h in H}, stored as the
/// partition of G/L into the blocks on which its members are constant. The
/// basis is the block indicators.
class InvariantSubspace {
public:
    InvariantSubspace(SpacePtr ambient, Subgroup stabilizer, std::vector<std::vector<std::size_t>> blocks)
        : ambient_(std::move(ambient)), stabilizer_(std::move(stabilizer)), blocks_(std::move(blocks)) {
        block_of_.assign(ambient_->size(), 0);
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (auto c : blocks_[b]) block_of_[c] = b;
    }

    const SpacePtr& ambient_ptr() const { return ambient_; }
    const CosetSpace& ambient() const { return *ambient_; }
    const Subgroup& stabilizer() const { return stabilizer_; }
    std::size_t dimension() const { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::size_t block_of(std::size_t coset) const { return block_of_[coset]; }

    QuotientFunction basis_vector(std::size_t b) const {
        std::vector<Rational> v(ambient_->size(), Rational(0));
        for (auto c : blocks_.at(b)) v[c] = 1;
        return {ambient_, std::move(v)};
    }

    std::vector<QuotientFunction> basis() const {
        std::vector<QuotientFunction> out;
        out.reserve(blocks_.size());
        for (std::size_t b = 0; b < blocks_.size(); ++b) out.push_back(basis_vector(b));
        return out;
    }

    /// Coordinates in the partition basis, or nullopt when f is not constant
    /// on every block.
    std::optional<std::vector<Rational>> coordinates(const QuotientFunction& f) const {
        require_same_space(*ambient_, f.space());
        std::vector<Rational> coords(blocks_.size());
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            coords[b] = f[blocks_[b].front()];
            for (auto c : blocks_[b])
                if (f[c] != coords[b]) return std::nullopt;
        }
        return coords;
    }

    QuotientFunction expand(std::span<const Rational> coords) const {
        if (coords.size() != blocks_.size()) throw SpaceMismatch("coordinate vector length != subspace dimension");
        std::vector<Rational> v(ambient_->size());
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = coords[block_of_[c]];
        return {ambient_, std::move(v)};
    }

    /// Orthogonal-style projection by averaging over each block.
    QuotientFunction average(const QuotientFunction& f) const {
        require_same_space(*ambient_, f.space());
        std::vector<Rational> coords(blocks_.size());
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            Rational s = 0;
            for (auto c : blocks_[b]) s += f[c];
            coords[b] = s / static_cast<long>(blocks_[b].size());
        }
        return expand(coords);
    }

private:
    SpacePtr ambient_;
    Subgroup stabilizer_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
};

/// Partition of G/L generated by xL ~ xhL. H need not contain L; the blocks
/// are then the images of the cosets of <H, L>.
inline InvariantSubspace invariant_subspace(const SpacePtr& ambient, const Subgroup& h) {
    require_same_parent(ambient->subgroup(), h);
    const FiniteGroup& g = ambient->group();
    std::vector<std::size_t> parent(ambient->size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (Element x = 0; x < g.order(); ++x)
        for (auto k : h.elements()) {
            const std::size_t a = find(ambient->coset_of(x));
            const std::size_t b = find(ambient->coset_of(g.mul(x, k)));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_index(ambient->size(), static_cast<std::size_t>(-1));
    for (std::size_t c = 0; c < ambient->size(); ++c) {
        const std::size_t root = find(c);
        if (block_index[root] == static_cast<std::size_t>(-1)) {
            block_index[root] = blocks.size();
            blocks.emplace_back();
        }
        blocks[block_index[root]].push_back(c);
    }
    return {ambient, h, std::move(blocks)};
}

/// Exhaustive check of f(xhL) == f(xL) over all x in G and h in the
/// stabilizer of S.
inline bool membership(const QuotientFunction& f, const InvariantSubspace& s) {
    require_same_space(f.space(), s.ambient());
    const CosetSpace& space = f.space();
    const FiniteGroup& g = space.group();
    for (Element x = 0; x < g.order(); ++x)
        for (auto k : s.stabilizer().elements())
            if (f.at_element(g.mul(x, k)) != f.at_element(x)) return false;
    return true;
}

/// True iff the two subspaces induce the same partition of their common
/// ambient space.
inline bool subspace_equal(const InvariantSubspace& a, const InvariantSubspace& b) {
    require_same_space(a.ambient(), b.ambient());
    return a.blocks() == b.blocks();
}

/// chi_{H/L}: indicator of the cosets hL, h in H, inside G/L.
inline QuotientFunction chi_HL(const SpacePtr& ambient, const Subgroup& h) {
    require_same_parent(ambient->subgroup(), h);
    if (!ambient->subgroup().is_subset_of(h))
        throw PreconditionError("chi_HL: " + ambient->subgroup().label() + " is not contained in " + h.label());
    std::vector<Rational> v(ambient->size(), Rational(0));
    for (auto k : h.elements()) v[ambient->coset_of(k)] = 1;
    return {ambient, std::move(v)};
}

/// Normalization under which chi_{H/L} is a right unit of the lift
/// convolution.
inline Rational default_convolution_constant(const Subgroup& h) { return Rational(1, h.order()); }

/// Lift f, g to right-L-invariant functions on G, form
/// c * sum_y f(y) g(y^-1 x), and descend back to G/L.
inline QuotientFunction convolve(const QuotientFunction& f, const QuotientFunction& g, const Rational& normalization) {
    require_same_space(f.space(), g.space());
    const CosetSpace& space = f.space();
    const FiniteGroup& grp = space.group();
    std::vector<Rational> lifted(grp.order());
    for (Element x = 0; x < grp.order(); ++x) {
        Rational acc = 0;
        for (Element y = 0; y < grp.order(); ++y) {
            const Rational& fy = f.at_element(y);
            if (fy == 0) continue;
            const Rational& gy = g.at_element(grp.mul(grp.inv(y), x));
            if (gy != 0) acc += fy * gy;
        }
        lifted[x] = acc * normalization;
    }
    std::vector<Rational> out(space.size());
    for (std::size_t c = 0; c < space.size(); ++c) {
        out[c] = lifted[space.rep(c)];
        for (auto x : space.members(c))
            if (lifted[x] != out[c]) throw ValidationError("lift convolution is not right-invariant; cannot descend");
    }
    return {f.space_ptr(), std::move(out)};
}

/// Identify functions on G with functions on G/{e}.
inline QuotientFunction as_quotient(const GroupFunction& f) { return {trivial_space(f.group_ptr()), f.values()}; }
inline GroupFunction as_group_function(const QuotientFunction& f) {
    if (!f.space().subgroup().is_trivial()) throw SpaceMismatch("as_group_function needs a function on G/{e}");
    return {f.space().group_ptr(), f.values()};
}

/// C(G : K), the right-K-invariant functions on G, as a partition of G into
/// the left cosets xK.
inline InvariantSubspace fixed_space_on_G(const GroupPtr& g, const Subgroup& k) {
    return invariant_subspace(trivial_space(g), k);
}

/// (f * mu)(x) = sum_y f(xy) mu(y) for a point-weight measure mu on G.
inline GroupFunction convolve_measure(const GroupFunction& f, std::span<const Rational> mu) {
    const FiniteGroup& g = f.group();
    if (mu.size() != g.order()) throw SpaceMismatch("measure needs one weight per group element");
    std::vector<Rational> out(g.order());
    for (Element x = 0; x < g.order(); ++x) {
        Rational acc = 0;
        for (Element y = 0; y < g.order(); ++y)
            if (mu[y] != 0) acc += f[g.mul(x, y)] * mu[y];
        out[x] = acc;
    }
    return {f.group_ptr(), std::move(out)};
}

/// Haar measure of H viewed as a measure on G supported on H.
inline std::vector<Rational> restriction_measure(const Subgroup& h, HaarConvention c) {
    std::vector<Rational> mu(h.group().order(), Rational(0));
    for (auto k : h.elements()) mu[k] = haar_weight(h.order(), c);
    return mu;
}

}  // namespace radon
