#pragma once

#include "tpqr/numeric.hpp"

#include <vector>

namespace tpqr {

// Dense integer matrix, row-major, entrywise equality.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;
    IntMatrix transposed() const;

    std::vector<Int> apply(const std::vector<Int>& v) const; // matrix * column vector

    // Exact inverse; requires det = +-1 (throws NotInvertibleError otherwise).
    IntMatrix inverse_unimodular() const;

    Int determinant() const; // Bareiss fraction-free elimination

    bool is_upper_unitriangular() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

// Dense rational matrix; just enough for exact solves and rank.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}
    explicit RatMatrix(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rat& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Rat& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref();
    int rank() const;

    // Solves self * X = rhs (self square, invertible). Throws NotInvertibleError.
    RatMatrix solve(const RatMatrix& rhs) const;

    // Conversion that asserts every entry is an integer.
    IntMatrix to_int_matrix() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> entries_;
};

} // namespace tpqr
