#pragma once

// Smith normal form and the cokernel computations built on it. This is the
// integer linear algebra that powers unit indices, subgroup counting and
// lattice membership throughout the library.

#include "tropext/errors.hpp"
#include "tropext/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropext {

struct SmithForm {
    IntMatrix u; // rows x rows, unimodular
    IntMatrix d; // rows x cols, diagonal with d1 | d2 | ...
    IntMatrix v; // cols x cols, unimodular
};

namespace detail {

// Pivot rule: smallest nonzero absolute value in the trailing submatrix,
// row-major tie-break. Fixed so outputs are deterministic.
inline bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best(0);
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int a = int_abs(d.at(i, j));
            if (a == 0) continue;
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

inline bool cross_clear(const IntMatrix& d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

} // namespace detail

// U * A * V = D with U, V unimodular and D diagonal, nonnegative, each entry
// dividing the next. Deterministic for a given input.
inline SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = s.d;
    const std::size_t steps = m < n ? m : n;

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!detail::find_pivot(d, t, pi, pj)) break; // trailing block all zero
            if (pi != t) { d.swap_rows(t, pi); s.u.swap_rows(t, pi); }
            if (pj != t) { d.swap_cols(t, pj); s.v.swap_cols(t, pj); }

            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                const Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) { d.add_row(i, t, -q); s.u.add_row(i, t, -q); }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                const Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) { d.add_col(j, t, -q); s.v.add_col(j, t, -q); }
            }
            if (!detail::cross_clear(d, t)) continue; // remainders left; shrink pivot again

            // Pivot must divide the rest of the trailing block for the chain.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        s.u.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(t, t) < 0) { d.negate_row(t); s.u.negate_row(t); }
    }
    return s;
}

inline std::vector<Int> smith_diagonal(const IntMatrix& d) {
    std::vector<Int> out;
    const std::size_t k = d.rows() < d.cols() ? d.rows() : d.cols();
    for (std::size_t i = 0; i < k; ++i) out.push_back(d.at(i, i));
    return out;
}

inline std::size_t lattice_rank(const IntMatrix& a) {
    const auto diag = smith_diagonal(smith_normal_form(a).d);
    std::size_t r = 0;
    for (const auto& x : diag)
        if (x != 0) ++r;
    return r;
}

inline bool is_injective(const IntMatrix& a) { return lattice_rank(a) == a.cols(); }

// |coker A| for injective A; nullopt when the cokernel is infinite.
inline std::optional<Int> cokernel_order(const IntMatrix& a) {
    const SmithForm s = smith_normal_form(a);
    const auto diag = smith_diagonal(s.d);
    std::size_t rank = 0;
    Int prod(1);
    for (const auto& x : diag)
        if (x != 0) { ++rank; prod *= x; }
    if (rank != a.cols())
        throw NonInjectiveEmbedding("matrix has nontrivial kernel");
    if (rank != a.rows()) return std::nullopt;
    return prod;
}

// Number of elements of coker A of order dividing n. The free part only ever
// contributes the identity, so this is finite even for infinite cokernels.
inline Int count_order_dividing(const IntMatrix& a, const Int& n) {
    if (n <= 0) throw MathError("count_order_dividing requires n >= 1");
    const SmithForm s = smith_normal_form(a);
    const auto diag = smith_diagonal(s.d);
    std::size_t rank = 0;
    Int count(1);
    for (const auto& x : diag)
        if (x != 0) { ++rank; count *= int_gcd(n, x); }
    if (rank != a.cols())
        throw NonInjectiveEmbedding("matrix has nontrivial kernel");
    return count;
}

// Exact inverse of a unimodular matrix: Euclidean row reduction to upper
// triangular form (diagonal +-1 since det = +-1), then back-substitution,
// with every row operation mirrored on an identity block.
inline IntMatrix inverse_unimodular(const IntMatrix& u) {
    if (!is_unimodular(u)) throw MathError("inverse of non-unimodular matrix");
    const std::size_t n = u.rows();
    IntMatrix a = u, inv = IntMatrix::identity(n);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t best = n;
            Int bestabs(0);
            for (std::size_t i = t; i < n; ++i) {
                const Int v = int_abs(a.at(i, t));
                if (v != 0 && (best == n || v < bestabs)) { bestabs = v; best = i; }
            }
            if (best == n) throw MathError("unexpected singular block");
            if (best != t) { a.swap_rows(t, best); inv.swap_rows(t, best); }
            bool clear = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a.at(i, t) == 0) continue;
                const Int q = a.at(i, t) / a.at(t, t);
                if (q != 0) { a.add_row(i, t, -q); inv.add_row(i, t, -q); }
                if (a.at(i, t) != 0) clear = false;
            }
            if (clear) break;
        }
    }
    for (std::size_t ti = n; ti-- > 0;) {
        if (a.at(ti, ti) < 0) { a.negate_row(ti); inv.negate_row(ti); }
        for (std::size_t i = 0; i < ti; ++i) {
            const Int q = a.at(i, ti);
            if (q != 0) { a.add_row(i, ti, -q); inv.add_row(i, ti, -q); }
        }
    }
    return inv;
}

// Solve A x = v over the integers (A injective). Returns nullopt when v is
// not in the column lattice of A.
inline std::optional<std::vector<Int>> lattice_solve(const IntMatrix& a, const std::vector<Int>& v) {
    if (v.size() != a.rows()) throw DimensionMismatch("lattice_solve shape mismatch");
    const SmithForm s = smith_normal_form(a);
    const auto diag = smith_diagonal(s.d);
    std::size_t rank = 0;
    for (const auto& x : diag)
        if (x != 0) ++rank;
    if (rank != a.cols()) throw NonInjectiveEmbedding("matrix has nontrivial kernel");

    const std::vector<Int> w = s.u.apply(v); // U v must lie in im(D)
    std::vector<Int> y(a.cols(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < diag.size() && diag[i] != 0) {
            if (w[i] % diag[i] != 0) return std::nullopt;
            y[i] = w[i] / diag[i];
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(y);
}

inline bool lattice_contains(const IntMatrix& a, const std::vector<Int>& v) {
    return lattice_solve(a, v).has_value();
}

// A basis (as matrix columns) for the sublattice spanned by the given vectors.
inline IntMatrix lattice_basis(std::size_t ambient_rank, const std::vector<std::vector<Int>>& vectors) {
    IntMatrix cols(ambient_rank, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != ambient_rank) throw DimensionMismatch("lattice_basis vector length");
        for (std::size_t i = 0; i < ambient_rank; ++i) cols.at(i, j) = vectors[j][i];
    }
    const SmithForm s = smith_normal_form(cols);
    const auto diag = smith_diagonal(s.d);
    const IntMatrix uinv = inverse_unimodular(s.u);
    std::size_t rank = 0;
    for (const auto& x : diag)
        if (x != 0) ++rank;
    // im(A) = im(U^-1 D); nonzero columns of U^-1 D form a basis.
    IntMatrix basis(ambient_rank, rank);
    std::size_t out = 0;
    for (std::size_t j = 0; j < diag.size(); ++j) {
        if (diag[j] == 0) continue;
        for (std::size_t i = 0; i < ambient_rank; ++i) basis.at(i, out) = uinv.at(i, j) * diag[j];
        ++out;
    }
    return basis;
}

} // namespace tropext
