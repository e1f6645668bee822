#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "torix/arith.hpp"

namespace torix {

/// Dense row-major matrix. Small by design: fans live in rank <= 4 and
/// carry a few dozen rays at most.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RationalMatrix = Matrix<Rational>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, std::span<const Int> v);
RationalMatrix to_rational(const IntMatrix& m);

// ---- integer normal forms ----------------------------------------------

/// U * A = H with U unimodular and H in row Hermite normal form
/// (pivots positive, entries above each pivot reduced into [0, pivot)).
struct HermiteForm {
    IntMatrix transform;
    IntMatrix form;
    std::vector<std::size_t> pivot_cols;
};

HermiteForm row_hermite(const IntMatrix& a);

/// P * A * Q = diag(invariants) with P, Q unimodular; invariants are
/// nonnegative and each divides the next; zeros (rank deficiency) trail.
struct SmithForm {
    IntMatrix left;
    IntMatrix right;
    std::vector<Int> invariants; // length min(rows, cols)
};

SmithForm smith(const IntMatrix& a);

/// Basis of {r : r * A = 0} as rows, saturated, in Hermite normal form.
IntMatrix left_kernel(const IntMatrix& a);

/// Integer solution of A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const Int> b);

// ---- exact rational linear algebra ---------------------------------------

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);
std::size_t rank(const IntMatrix& m);

/// Basis of the right kernel, one vector per free column.
std::vector<RationalVector> kernel(RationalMatrix m);

/// Some solution of A x = b (free variables set to zero), if consistent.
std::optional<RationalVector> solve(const RationalMatrix& a, std::span<const Rational> b);

/// Sparse vector as sorted (index, value) pairs with nonzero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental sparse row echelon basis.
class EchelonBasis {
public:
    /// Returns true when v was independent of the vectors inserted so far.
    bool insert(SparseVector v);
    std::size_t rank() const { return rank_; }

private:
    // pivot column -> row with leading entry 1 at that column
    std::map<std::size_t, SparseVector> rows_;
    std::size_t rank_ = 0;
};

std::size_t sparse_rank(std::vector<SparseVector> vectors);

} // namespace torix
