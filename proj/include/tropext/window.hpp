#pragma once

// Bounded lattice windows for the search-based analyses. Every scan uses the
// same deterministic order: shells of growing max-norm, descending
// lexicographic inside a shell (so positive directions come first).

#include "tropext/integers.hpp"
#include "tropext/ordered_group.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace tropext {

namespace detail {

inline Int max_norm(const ExponentVector& p) {
    Int m(0);
    for (const auto& c : p.coords)
        if (int_abs(c) > m) m = int_abs(c);
    return m;
}

inline std::vector<ExponentVector> window_box(std::size_t rank, const Int& bound) {
    std::vector<ExponentVector> out;
    ExponentVector p = ExponentVector::zeros(rank);
    for (auto& c : p.coords) c = -bound;
    for (;;) {
        out.push_back(p);
        std::size_t i = rank;
        bool advanced = false;
        while (i-- > 0) {
            if (p.coords[i] < bound) {
                ++p.coords[i];
                for (std::size_t j = i + 1; j < rank; ++j) p.coords[j] = -bound;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

} // namespace detail

// All points of [-bound, bound]^rank in scan order.
inline std::vector<ExponentVector> window_points(std::size_t rank, const Int& bound) {
    std::vector<ExponentVector> out = detail::window_box(rank, bound);
    std::sort(out.begin(), out.end(), [](const ExponentVector& a, const ExponentVector& b) {
        const Int na = detail::max_norm(a), nb = detail::max_norm(b);
        if (na != nb) return na < nb;
        return b < a;
    });
    return out;
}

// Window sorted by the group's own order; meaningful for total orders, where
// bound searches scan ascending (least witness) or descending (greatest).
inline std::vector<ExponentVector> window_points_by_order(const OrderedGroup& g, const Int& bound,
                                                          bool ascending) {
    std::vector<ExponentVector> out;
    if (g.is_total()) {
        out = detail::window_box(g.rank, bound);
        std::sort(out.begin(), out.end(), [&](const ExponentVector& a, const ExponentVector& b) {
            const Ordering c = compare(g, a, b);
            if (c == Ordering::less) return ascending;
            if (c == Ordering::greater) return !ascending;
            return false;
        });
    } else {
        out = window_points(g.rank, bound); // deterministic fallback
    }
    return out;
}

} // namespace tropext
