#pragma once

// Finitely generated abelian groups carrying a translation-invariant order.
// Three order families are supported: lexicographic and rational-weight
// orders are total, the componentwise order is a lattice order with binary
// joins. Rank 0 is legal everywhere and gives the trivial group.

#include "tropext/errors.hpp"
#include "tropext/integers.hpp"
#include "tropext/matrix.hpp"
#include "tropext/smith.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace tropext {

// Element of Z^k written additively; doubles as the exponent of a nonzero
// semifield element.
struct ExponentVector {
    std::vector<Int> coords;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<Int> c) : coords(std::move(c)) {}
    ExponentVector(std::initializer_list<Int> c) : coords(c) {}

    static ExponentVector zeros(std::size_t rank) {
        return ExponentVector(std::vector<Int>(rank, Int(0)));
    }

    std::size_t rank() const { return coords.size(); }

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const ExponentVector& o) const { return coords == o.coords; }
    bool operator!=(const ExponentVector& o) const { return coords != o.coords; }
    // Plain container order so vectors can live in std::set; unrelated to any group order.
    auto operator<=>(const ExponentVector& o) const { return coords <=> o.coords; }

    ExponentVector operator+(const ExponentVector& o) const {
        require_same_rank(o);
        ExponentVector out = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += o.coords[i];
        return out;
    }
    ExponentVector operator-(const ExponentVector& o) const {
        require_same_rank(o);
        ExponentVector out = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] -= o.coords[i];
        return out;
    }
    ExponentVector operator-() const {
        ExponentVector out = *this;
        for (auto& c : out.coords) c = -c;
        return out;
    }
    ExponentVector operator*(const Int& k) const {
        ExponentVector out = *this;
        for (auto& c : out.coords) c *= k;
        return out;
    }

    void require_same_rank(const ExponentVector& o) const {
        if (coords.size() != o.coords.size())
            throw DimensionMismatch("exponent vectors of different rank");
    }
};

enum class Ordering { less, equal, greater, incomparable };

enum class OrderKind { lex, componentwise, rational_weights };

class OrderSpec {
public:
    static OrderSpec lex() { return OrderSpec(OrderKind::lex, {}); }
    static OrderSpec componentwise() { return OrderSpec(OrderKind::componentwise, {}); }

    // The weight functional must be injective on the integer lattice; we look
    // for a nonzero integer kernel vector (denominators cleared, kernel via
    // SNF) and refuse construction if one exists.
    static OrderSpec rational_weights(std::vector<Rat> weights) {
        const std::size_t k = weights.size();
        Int denom(1);
        for (const auto& w : weights) denom = int_lcm(denom, rat_den(w));
        IntMatrix functional(1, k);
        for (std::size_t j = 0; j < k; ++j)
            functional.at(0, j) = rat_num(weights[j]) * (denom / rat_den(weights[j]));
        if (lattice_rank(functional) != k)
            throw NonInjectiveWeights("weight functional has a nonzero integer kernel vector");
        return OrderSpec(OrderKind::rational_weights, std::move(weights));
    }

    OrderKind kind() const { return kind_; }
    const std::vector<Rat>& weights() const { return weights_; }

    bool is_total() const { return kind_ != OrderKind::componentwise; }

    bool operator==(const OrderSpec& o) const {
        return kind_ == o.kind_ && weights_ == o.weights_;
    }

private:
    OrderSpec(OrderKind kind, std::vector<Rat> weights)
        : kind_(kind), weights_(std::move(weights)) {}

    OrderKind kind_;
    std::vector<Rat> weights_;
};

struct OrderedGroup {
    std::size_t rank = 0;
    OrderSpec order = OrderSpec::lex();

    OrderedGroup(std::size_t r, OrderSpec o) : rank(r), order(std::move(o)) {
        if (order.kind() == OrderKind::rational_weights && order.weights().size() != rank)
            throw DimensionMismatch("weight count differs from rank");
    }

    // The order is total iff the spec is, except that rank <= 1 componentwise
    // collapses to the usual total order on Z.
    bool is_total() const { return order.is_total() || rank <= 1; }

    bool operator==(const OrderedGroup& o) const { return rank == o.rank && order == o.order; }
};

inline OrderedGroup zmax_group() { return OrderedGroup(1, OrderSpec::lex()); }
inline OrderedGroup boolean_group() { return OrderedGroup(0, OrderSpec::lex()); }

inline Ordering compare(const OrderedGroup& g, const ExponentVector& x, const ExponentVector& y) {
    if (x.rank() != g.rank || y.rank() != g.rank)
        throw DimensionMismatch("element rank differs from group rank");
    switch (g.order.kind()) {
    case OrderKind::lex:
        for (std::size_t i = 0; i < g.rank; ++i) {
            if (x.coords[i] < y.coords[i]) return Ordering::less;
            if (x.coords[i] > y.coords[i]) return Ordering::greater;
        }
        return Ordering::equal;
    case OrderKind::componentwise: {
        bool some_less = false, some_greater = false;
        for (std::size_t i = 0; i < g.rank; ++i) {
            if (x.coords[i] < y.coords[i]) some_less = true;
            if (x.coords[i] > y.coords[i]) some_greater = true;
        }
        if (some_less && some_greater) return Ordering::incomparable;
        if (some_less) return Ordering::less;
        if (some_greater) return Ordering::greater;
        return Ordering::equal;
    }
    case OrderKind::rational_weights: {
        Rat lhs(0), rhs(0);
        for (std::size_t i = 0; i < g.rank; ++i) {
            lhs += g.order.weights()[i] * Rat(x.coords[i]);
            rhs += g.order.weights()[i] * Rat(y.coords[i]);
        }
        if (lhs < rhs) return Ordering::less;
        if (lhs > rhs) return Ordering::greater;
        return Ordering::equal; // injectivity makes equal values equal vectors
    }
    }
    throw MathError("unreachable order kind");
}

inline bool leq(const OrderedGroup& g, const ExponentVector& x, const ExponentVector& y) {
    const Ordering o = compare(g, x, y);
    return o == Ordering::less || o == Ordering::equal;
}

// Least upper bound; for total orders this is the larger element, for the
// componentwise order the coordinatewise max.
inline ExponentVector join(const OrderedGroup& g, const ExponentVector& x, const ExponentVector& y) {
    if (x.rank() != g.rank || y.rank() != g.rank)
        throw DimensionMismatch("element rank differs from group rank");
    if (g.order.kind() == OrderKind::componentwise) {
        ExponentVector out = x;
        for (std::size_t i = 0; i < g.rank; ++i)
            if (y.coords[i] > out.coords[i]) out.coords[i] = y.coords[i];
        return out;
    }
    return compare(g, x, y) == Ordering::less ? y : x;
}

} // namespace tropext
