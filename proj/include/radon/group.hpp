#pragma once

// Finite groups given by a validated multiplication table, their subgroups,
// and conjugation utilities.
//
// Elements are dense indices 0..order-1. Numbering of the named constructors:
//   cyclic(n)        k            <-> k (mod n), identity 0
//   dihedral(n)      i < n        <-> r^i,  n + i <-> s r^i   (order 2n)
//   symmetric(n)     permutations of {0..n-1} in lexicographic order of their
//                    one-line notation, product (p*q)(x) = p(q(x)); index 0 is
//                    the identity. For n = 3: 2 = (12), 5 = (13), 1 = (23).
//   quaternion8()    0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
//   direct_product   (a, b) <-> a * |B| + b

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radon/errors.hpp"

namespace radon {

using Element = std::size_t;

class GroupValidationError : public ValidationError {
public:
    enum class Axiom { shape, identity, range, associativity, inverse };

    GroupValidationError(Axiom axiom, std::string message, std::array<Element, 3> witness = {})
        : ValidationError(std::move(message)), axiom_(axiom), witness_(witness) {}

    Axiom axiom() const { return axiom_; }
    /// The failing triple (x, y, z) for associativity; x in slot 0 otherwise.
    const std::array<Element, 3>& witness() const { return witness_; }

private:
    Axiom axiom_;
    std::array<Element, 3> witness_;
};

class FiniteGroup {
public:
    using Table = std::vector<std::vector<Element>>;

    /// Validates every group axiom eagerly; throws GroupValidationError
    /// naming the first failing element or triple.
    static FiniteGroup from_table(Table table, std::string name = "table",
                                  std::vector<std::string> labels = {}) {
        const std::size_t n = table.size();
        if (n == 0) throw GroupValidationError(GroupValidationError::Axiom::shape, "empty multiplication table");
        for (std::size_t x = 0; x < n; ++x)
            if (table[x].size() != n)
                throw GroupValidationError(GroupValidationError::Axiom::shape,
                                           "row " + std::to_string(x) + " has length " +
                                               std::to_string(table[x].size()) + ", expected " +
                                               std::to_string(n),
                                           {x, 0, 0});

        std::optional<Element> identity;
        for (Element e = 0; e < n && !identity; ++e) {
            bool ok = true;
            for (Element x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
            if (ok) identity = e;
        }
        if (!identity)
            throw GroupValidationError(GroupValidationError::Axiom::identity,
                                       "identity axiom fails: no element e with e*x == x == x*e for all x");

        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                if (table[x][y] >= n)
                    throw GroupValidationError(GroupValidationError::Axiom::range,
                                               "table entry (" + std::to_string(x) + ", " + std::to_string(y) +
                                                   ") = " + std::to_string(table[x][y]) + " is out of range",
                                               {x, y, 0});

        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                for (Element z = 0; z < n; ++z)
                    if (table[table[x][y]][z] != table[x][table[y][z]])
                        throw GroupValidationError(GroupValidationError::Axiom::associativity,
                                                   "associativity fails for (x, y, z) = (" + std::to_string(x) +
                                                       ", " + std::to_string(y) + ", " + std::to_string(z) + ")",
                                                   {x, y, z});

        std::vector<Element> inverse(n);
        for (Element x = 0; x < n; ++x) {
            std::optional<Element> inv;
            for (Element y = 0; y < n && !inv; ++y)
                if (table[x][y] == *identity && table[y][x] == *identity) inv = y;
            if (!inv)
                throw GroupValidationError(GroupValidationError::Axiom::inverse,
                                           "inverse axiom fails for element " + std::to_string(x), {x, 0, 0});
            inverse[x] = *inv;
        }

        if (labels.empty()) {
            labels.reserve(n);
            for (Element x = 0; x < n; ++x) labels.push_back(std::to_string(x));
        } else if (labels.size() != n) {
            throw GroupValidationError(GroupValidationError::Axiom::shape, "label count does not match group order");
        }

        FiniteGroup g;
        g.table_ = std::move(table);
        g.identity_ = *identity;
        g.inverse_ = std::move(inverse);
        g.name_ = std::move(name);
        g.labels_ = std::move(labels);
        return g;
    }

    std::size_t order() const { return table_.size(); }
    Element identity() const { return identity_; }
    Element mul(Element x, Element y) const { return table_[x][y]; }
    Element inv(Element x) const { return inverse_[x]; }
    Element conj(Element x, Element g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g

    const Table& table() const { return table_; }
    const std::vector<Element>& inverses() const { return inverse_; }
    const std::string& name() const { return name_; }
    const std::string& label(Element x) const { return labels_[x]; }

    std::size_t element_order(Element x) const {
        std::size_t k = 1;
        for (Element y = x; y != identity_; y = mul(y, x)) ++k;
        return k;
    }

private:
    FiniteGroup() = default;

    Table table_;
    Element identity_ = 0;
    std::vector<Element> inverse_;
    std::string name_;
    std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// ---------------------------------------------------------------- named groups

inline FiniteGroup cyclic(std::size_t n) {
    if (n == 0) throw ValidationError("cyclic group needs n >= 1");
    FiniteGroup::Table t(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup::from_table(std::move(t), "Z" + std::to_string(n));
}

inline FiniteGroup dihedral(std::size_t n) {
    if (n == 0) throw ValidationError("dihedral group needs n >= 1");
    const std::size_t order = 2 * n;
    FiniteGroup::Table t(order, std::vector<Element>(order));
    std::vector<std::string> labels(order);
    for (Element x = 0; x < order; ++x) {
        const bool xs = x >= n;
        const std::size_t a = x % n;
        labels[x] = (xs ? "sr^" : "r^") + std::to_string(a);
        for (Element y = 0; y < order; ++y) {
            const bool ys = y >= n;
            const std::size_t b = y % n;
            // s r^a = r^-a s
            const std::size_t rot = ys ? (b + n - a) % n : (a + b) % n;
            t[x][y] = ((xs != ys) ? n : 0) + rot;
        }
    }
    return FiniteGroup::from_table(std::move(t), "D" + std::to_string(n), std::move(labels));
}

inline FiniteGroup symmetric(std::size_t n) {
    if (n == 0 || n > 6) throw ValidationError("symmetric group supported for 1 <= n <= 6");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&](const std::vector<std::size_t>& q) {
        return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    const std::size_t order = perms.size();
    FiniteGroup::Table t(order, std::vector<Element>(order));
    std::vector<std::string> labels(order);
    std::vector<std::size_t> r(n);
    for (Element a = 0; a < order; ++a) {
        labels[a] = "[";
        for (std::size_t i = 0; i < n; ++i) labels[a] += (i ? "," : "") + std::to_string(perms[a][i]);
        labels[a] += "]";
        for (Element b = 0; b < order; ++b) {
            for (std::size_t x = 0; x < n; ++x) r[x] = perms[a][perms[b][x]];
            t[a][b] = index_of(r);
        }
    }
    return FiniteGroup::from_table(std::move(t), "S" + std::to_string(n), std::move(labels));
}

inline FiniteGroup quaternion8() {
    // unit index 0..3 = 1, i, j, k; unit_mul[a][b] = {sign, unit}
    constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    FiniteGroup::Table t(8, std::vector<Element>(8));
    for (Element x = 0; x < 8; ++x)
        for (Element y = 0; y < 8; ++y) {
            const std::size_t ux = x / 2, uy = y / 2;
            const bool neg = ((x % 2) ^ (y % 2) ^ (sign[ux][uy] < 0)) != 0;
            t[x][y] = 2 * static_cast<Element>(unit[ux][uy]) + (neg ? 1 : 0);
        }
    return FiniteGroup::from_table(std::move(t), "Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    FiniteGroup::Table t(n, std::vector<Element>(n));
    std::vector<std::string> labels(n);
    for (Element x = 0; x < n; ++x) {
        labels[x] = "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
        for (Element y = 0; y < n; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
    return FiniteGroup::from_table(std::move(t), a.name() + "x" + b.name(), std::move(labels));
}

// ------------------------------------------------------------------ subgroups

class Subgroup {
public:
    /// Validates closure; throws ValidationError when `elements` is not a
    /// subgroup of `parent`.
    static Subgroup from_elements(GroupPtr parent, std::vector<Element> elements) {
        const std::size_t n = parent->order();
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        std::vector<char> member(n, 0);
        for (auto x : elements) {
            if (x >= n) throw ValidationError("subgroup element " + std::to_string(x) + " out of range");
            member[x] = 1;
        }
        if (!member[parent->identity()]) throw ValidationError("subgroup does not contain the identity");
        for (auto x : elements) {
            if (!member[parent->inv(x)])
                throw ValidationError("subgroup not closed under inverse at " + std::to_string(x));
            for (auto y : elements)
                if (!member[parent->mul(x, y)])
                    throw ValidationError("subgroup not closed under product at (" + std::to_string(x) + ", " +
                                          std::to_string(y) + ")");
        }
        return Subgroup(std::move(parent), std::move(elements), std::move(member));
    }

    static Subgroup generated_by(GroupPtr parent, std::span<const Element> generators) {
        const std::size_t n = parent->order();
        std::vector<char> member(n, 0);
        std::vector<Element> elements{parent->identity()};
        member[parent->identity()] = 1;
        for (std::size_t i = 0; i < elements.size(); ++i)
            for (auto g : generators) {
                if (g >= n) throw ValidationError("generator " + std::to_string(g) + " out of range");
                const Element y = parent->mul(elements[i], g);
                if (!member[y]) {
                    member[y] = 1;
                    elements.push_back(y);
                }
            }
        std::sort(elements.begin(), elements.end());
        return Subgroup(std::move(parent), std::move(elements), std::move(member));
    }

    static Subgroup trivial(GroupPtr parent) {
        const Element e = parent->identity();
        return generated_by(std::move(parent), std::span<const Element>(&e, 1));
    }

    static Subgroup whole(GroupPtr parent) {
        std::vector<Element> all(parent->order());
        std::iota(all.begin(), all.end(), 0);
        std::vector<char> member(all.size(), 1);
        return Subgroup(std::move(parent), std::move(all), std::move(member));
    }

    const GroupPtr& parent() const { return parent_; }
    const FiniteGroup& group() const { return *parent_; }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(Element x) const { return x < member_.size() && member_[x]; }
    bool is_trivial() const { return elements_.size() == 1; }

    bool is_subset_of(const Subgroup& other) const {
        return std::all_of(elements_.begin(), elements_.end(), [&](Element x) { return other.contains(x); });
    }

    bool is_normal() const {
        for (Element g = 0; g < parent_->order(); ++g)
            for (auto k : elements_)
                if (!contains(parent_->conj(k, g))) return false;
        return true;
    }

    /// "{0,2}" using element indices.
    std::string label() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elements_.size(); ++i) s += (i ? "," : "") + std::to_string(elements_[i]);
        return s + "}";
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.elements_ == b.elements_;
    }

private:
    Subgroup(GroupPtr parent, std::vector<Element> elements, std::vector<char> member)
        : parent_(std::move(parent)), elements_(std::move(elements)), member_(std::move(member)) {}

    GroupPtr parent_;
    std::vector<Element> elements_;
    std::vector<char> member_;
};

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
    if (a.parent() != b.parent()) throw SpaceMismatch("subgroups belong to different groups");
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    std::vector<Element> common;
    for (auto x : a.elements())
        if (b.contains(x)) common.push_back(x);
    return Subgroup::from_elements(a.parent(), std::move(common));
}

/// The subgroup generated by a ∪ b.
inline Subgroup join(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    std::vector<Element> gens = a.elements();
    gens.insert(gens.end(), b.elements().begin(), b.elements().end());
    return Subgroup::generated_by(a.parent(), gens);
}

/// All subgroups, ordered by (order, element list).
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    std::vector<Subgroup> found{Subgroup::trivial(g)};
    std::set<std::vector<Element>> seen{found.front().elements()};
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (Element x = 0; x < g->order(); ++x) {
            if (found[i].contains(x)) continue;
            std::vector<Element> gens = found[i].elements();
            gens.push_back(x);
            Subgroup s = Subgroup::generated_by(g, gens);
            if (seen.insert(s.elements()).second) found.push_back(std::move(s));
        }
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return found;
}

/// g0^-1 K g0.
inline Subgroup conjugate_subgroup(const Subgroup& k, Element g0) {
    const FiniteGroup& g = k.group();
    if (g0 >= g.order()) throw ValidationError("conjugating element out of range");
    std::vector<Element> image;
    image.reserve(k.order());
    for (auto x : k.elements()) image.push_back(g.conj(x, g0));
    return Subgroup::from_elements(k.parent(), std::move(image));
}

/// Smallest g0 with g0^-1 K g0 == H, or nullopt when K and H are not
/// conjugate. Exhaustive over G.
inline std::optional<Element> find_conjugator(const Subgroup& k, const Subgroup& h) {
    require_same_parent(k, h);
    if (k.order() != h.order()) return std::nullopt;
    for (Element g0 = 0; g0 < k.group().order(); ++g0)
        if (conjugate_subgroup(k, g0) == h) return g0;
    return std::nullopt;
}

}  // namespace radon
