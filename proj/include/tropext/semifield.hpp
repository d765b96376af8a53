#pragma once

// Idempotent semifields M_max: the elements of an ordered group plus an
// absorbing zero, with addition given by the order's join and multiplication
// by the group law. Also the executable forms of the small structural lemmas
// these semifields satisfy (monotone division, no roots of unity, no finite
// subsemifield beyond {0, 1}).

#include "tropext/errors.hpp"
#include "tropext/ordered_group.hpp"

#include <compare>
#include <cstddef>
#include <set>
#include <utility>

namespace tropext {

// Zero (the adjoined -infinity) has no exponent vector, so it is a variant
// of its own rather than a sentinel value.
class SemifieldElement {
public:
    static SemifieldElement zero() { return SemifieldElement(); }
    static SemifieldElement unit(ExponentVector e) {
        SemifieldElement x;
        x.zero_ = false;
        x.exp_ = std::move(e);
        return x;
    }

    bool is_zero() const { return zero_; }

    const ExponentVector& exponent() const {
        if (zero_) throw DivisionByZero("zero has no exponent");
        return exp_;
    }

    bool operator==(const SemifieldElement& o) const {
        if (zero_ || o.zero_) return zero_ == o.zero_;
        return exp_ == o.exp_;
    }
    bool operator!=(const SemifieldElement& o) const { return !(*this == o); }
    // Container order only: zero first, then exponents.
    auto operator<=>(const SemifieldElement& o) const {
        if (auto c = (!zero_) <=> (!o.zero_); c != 0) return c;
        if (zero_) return std::strong_ordering::equal;
        return exp_ <=> o.exp_;
    }

private:
    SemifieldElement() : zero_(true) {}

    bool zero_;
    ExponentVector exp_;
};

class Semifield {
public:
    explicit Semifield(OrderedGroup group) : group_(std::move(group)) {}

    const OrderedGroup& group() const { return group_; }
    std::size_t rank() const { return group_.rank; }
    bool is_selective() const { return group_.is_total(); }

    SemifieldElement zero() const { return SemifieldElement::zero(); }
    SemifieldElement one() const { return SemifieldElement::unit(ExponentVector::zeros(group_.rank)); }
    SemifieldElement unit(ExponentVector e) const {
        if (e.rank() != group_.rank) throw DimensionMismatch("exponent rank differs from semifield rank");
        return SemifieldElement::unit(std::move(e));
    }

    SemifieldElement add(const SemifieldElement& a, const SemifieldElement& b) const {
        if (a.is_zero()) return check(b);
        if (b.is_zero()) return check(a);
        return SemifieldElement::unit(join(group_, a.exponent(), b.exponent()));
    }

    SemifieldElement mul(const SemifieldElement& a, const SemifieldElement& b) const {
        if (a.is_zero() || b.is_zero()) {
            check(a);
            check(b);
            return SemifieldElement::zero();
        }
        return SemifieldElement::unit(a.exponent() + b.exponent());
    }

    SemifieldElement inv(const SemifieldElement& a) const {
        if (a.is_zero()) throw DivisionByZero("inverse of zero");
        return SemifieldElement::unit(-a.exponent());
    }

    SemifieldElement pow(const SemifieldElement& a, const Int& n) const {
        if (a.is_zero()) {
            if (n > 0) return SemifieldElement::zero();
            if (n < 0) throw DivisionByZero("negative power of zero");
            throw UndefinedPower("pow(zero, 0) is undefined");
        }
        return SemifieldElement::unit(a.exponent() * n);
    }

    // x <= y in the semifield order, i.e. x + y = y. Zero is least.
    bool leq_elements(const SemifieldElement& x, const SemifieldElement& y) const {
        return add(x, y) == check(y);
    }

private:
    const SemifieldElement& check(const SemifieldElement& x) const {
        if (!x.is_zero() && x.exponent().rank() != group_.rank)
            throw DimensionMismatch("element rank differs from semifield rank");
        return x;
    }

    OrderedGroup group_;
};

inline Semifield zmax() { return Semifield(zmax_group()); }
inline Semifield boolean_semifield() { return Semifield(boolean_group()); }

// x^n + y^n = y^n forces x + y = y; evaluates both sides and reports whether
// the implication held for this triple.
inline bool check_monotonic_division(const Semifield& f, const SemifieldElement& x,
                                     const SemifieldElement& y, const Int& n) {
    if (n < 1) throw MathError("check_monotonic_division requires n >= 1");
    const SemifieldElement xn = f.pow(x, n);
    const SemifieldElement yn = f.pow(y, n);
    const bool premise = f.add(xn, yn) == yn;
    if (!premise) return true;
    return f.add(x, y) == y;
}

// No nonzero x other than 1 has x^n = 1 for any 1 <= n <= n_max.
inline bool torsion_free_units_check(const Semifield& f, const SemifieldElement& x, const Int& n_max) {
    if (x.is_zero()) throw DivisionByZero("torsion check needs a nonzero element");
    if (x == f.one()) return true;
    for (Int n = 1; n <= n_max; ++n)
        if (f.pow(x, n) == f.one()) return false;
    return true;
}

// The first `probe` powers of x are pairwise distinct, witnessing that the
// subsemifield generated by x is infinite.
inline bool finite_subsemifield_check(const Semifield& f, const SemifieldElement& x, std::size_t probe) {
    if (x.is_zero() || x == f.one()) throw MathError("probe needs x != 0 and x != 1");
    std::set<SemifieldElement> powers;
    SemifieldElement p = x;
    for (std::size_t i = 0; i < probe; ++i) {
        powers.insert(p);
        p = f.mul(p, x);
    }
    return powers.size() == probe;
}

} // namespace tropext
