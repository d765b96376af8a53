#pragma once

// Dense integer matrices with exact arbitrary-precision entries. These
// represent group homomorphisms between exponent lattices; sizes stay small
// (desk scale) so no effort is spent on sparsity.

#include "tropext/errors.hpp"
#include "tropext/integers.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace tropext {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
        : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
            for (const auto& v : r) data_.push_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        IntMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<Int> out(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += at(i, j) * v[j];
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    // row a += f * row b
    void add_row(std::size_t a, std::size_t b, const Int& f) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) += f * at(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const Int& f) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, a) += f * at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Fraction-free (Bareiss) determinant; exact for any size we meet in practice.
inline Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

inline bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    const Int d = determinant(m);
    return d == 1 || d == -1;
}

} // namespace tropext
