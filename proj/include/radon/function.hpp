#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "radon/coset_space.hpp"
#include "radon/rational.hpp"

namespace radon {

namespace detail {

inline std::vector<Rational> pointwise_product(std::span<const Rational> a, std::span<const Rational> b) {
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

inline Rational sup_norm(std::span<const Rational> v) {
    Rational m = 0;
    for (const auto& x : v)
        if (abs(x) > m) m = abs(x);
    return m;
}

inline Rational counting_l1(std::span<const Rational> v) {
    Rational s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

inline std::vector<std::size_t> support(std::span<const Rational> v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i);
    return s;
}

}  // namespace detail

/// Exact rational-valued function on a finite group.
class GroupFunction {
public:
    GroupFunction(GroupPtr group, std::vector<Rational> values) : group_(std::move(group)), values_(std::move(values)) {
        if (values_.size() != group_->order())
            throw SpaceMismatch("group function has " + std::to_string(values_.size()) + " values, group " +
                                group_->name() + " has order " + std::to_string(group_->order()));
    }

    static GroupFunction zero(GroupPtr g) {
        const std::size_t n = g->order();
        return {std::move(g), std::vector<Rational>(n, Rational(0))};
    }
    static GroupFunction constant(GroupPtr g, const Rational& c) {
        const std::size_t n = g->order();
        return {std::move(g), std::vector<Rational>(n, c)};
    }
    static GroupFunction indicator(GroupPtr g, Element x) {
        GroupFunction f = zero(std::move(g));
        f.values_.at(x) = 1;
        return f;
    }

    const GroupPtr& group_ptr() const { return group_; }
    const FiniteGroup& group() const { return *group_; }
    std::size_t size() const { return values_.size(); }
    const Rational& operator[](Element x) const { return values_[x]; }
    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const GroupFunction& a, const GroupFunction& b) {
        return a.group_ == b.group_ && a.values_ == b.values_;
    }

private:
    GroupPtr group_;
    std::vector<Rational> values_;
};

/// Exact rational-valued function on a coset space G/H.
class QuotientFunction {
public:
    QuotientFunction(SpacePtr space, std::vector<Rational> values) : space_(std::move(space)), values_(std::move(values)) {
        if (values_.size() != space_->size())
            throw SpaceMismatch("quotient function has " + std::to_string(values_.size()) + " values, space " +
                                space_->label() + " has " + std::to_string(space_->size()) + " cosets");
    }

    static QuotientFunction zero(SpacePtr s) {
        const std::size_t n = s->size();
        return {std::move(s), std::vector<Rational>(n, Rational(0))};
    }
    static QuotientFunction constant(SpacePtr s, const Rational& c) {
        const std::size_t n = s->size();
        return {std::move(s), std::vector<Rational>(n, c)};
    }
    static QuotientFunction indicator(SpacePtr s, std::size_t coset) {
        QuotientFunction f = zero(std::move(s));
        f.values_.at(coset) = 1;
        return f;
    }

    const SpacePtr& space_ptr() const { return space_; }
    const CosetSpace& space() const { return *space_; }
    std::size_t size() const { return values_.size(); }
    const Rational& operator[](std::size_t c) const { return values_[c]; }
    /// Value at the coset containing x.
    const Rational& at_element(Element x) const { return values_[space_->coset_of(x)]; }
    const std::vector<Rational>& values() const { return values_; }

    /// Structural equality: same coset space and identical values.
    friend bool operator==(const QuotientFunction& a, const QuotientFunction& b) {
        return *a.space_ == *b.space_ && a.values_ == b.values_;
    }

private:
    SpacePtr space_;
    std::vector<Rational> values_;
};

inline QuotientFunction operator*(const QuotientFunction& a, const QuotientFunction& b) {
    require_same_space(a.space(), b.space());
    return {a.space_ptr(), detail::pointwise_product(a.values(), b.values())};
}

inline GroupFunction operator*(const GroupFunction& a, const GroupFunction& b) {
    if (a.group_ptr() != b.group_ptr()) throw SpaceMismatch("group functions on different groups");
    return {a.group_ptr(), detail::pointwise_product(a.values(), b.values())};
}

inline Rational sup_norm(const GroupFunction& f) { return detail::sup_norm(f.values()); }
inline Rational sup_norm(const QuotientFunction& f) { return detail::sup_norm(f.values()); }
inline Rational counting_l1(const GroupFunction& f) { return detail::counting_l1(f.values()); }
inline Rational counting_l1(const QuotientFunction& f) { return detail::counting_l1(f.values()); }
inline std::vector<std::size_t> support(const QuotientFunction& f) { return detail::support(f.values()); }
inline std::vector<std::size_t> support(const GroupFunction& f) { return detail::support(f.values()); }

}  // namespace radon
