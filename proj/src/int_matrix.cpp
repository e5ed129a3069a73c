#include "tpqr/int_matrix.hpp"

#include "tpqr/errors.hpp"

namespace tpqr {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InternalError("from_rows: ragged row lengths");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw ConfigMismatchError("matrix product: inner dimensions differ");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ConfigMismatchError("matrix sum: shapes differ");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ConfigMismatchError("matrix difference: shapes differ");
    IntMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw ConfigMismatchError("matrix apply: vector length differs");
    std::vector<Int> out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::inverse_unimodular() const {
    if (!is_square()) throw NotInvertibleError("inverse: matrix not square");
    RatMatrix lhs(*this);
    RatMatrix inv = lhs.solve(RatMatrix(IntMatrix::identity(rows_)));
    IntMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rat& e = inv.at(i, j);
            if (!is_integer(e)) throw NotInvertibleError("inverse: not invertible over the integers");
            out.at(i, j) = e.get_num();
        }
    return out;
}

Int IntMatrix::determinant() const {
    if (!is_square()) throw NotInvertibleError("determinant: matrix not square");
    const int n = rows_;
    if (n == 0) return 1;
    IntMatrix a(*this);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool IntMatrix::is_upper_unitriangular() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i) {
        if (at(i, i) != 1) return false;
        for (int j = 0; j < i; ++j)
            if (at(i, j) != 0) return false;
    }
    return true;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

std::vector<int> RatMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i)
            if (at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
        Rat inv = 1 / at(row, col);
        for (int j = col; j < cols_; ++j) at(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            Rat factor = at(i, col);
            for (int j = col; j < cols_; ++j) at(i, j) -= factor * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int RatMatrix::rank() const {
    RatMatrix copy(*this);
    return static_cast<int>(copy.rref().size());
}

RatMatrix RatMatrix::solve(const RatMatrix& rhs) const {
    if (rows_ != cols_) throw NotInvertibleError("solve: matrix not square");
    if (rhs.rows() != rows_) throw ConfigMismatchError("solve: right-hand side shape differs");
    RatMatrix aug(rows_, cols_ + rhs.cols());
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        for (int j = 0; j < rhs.cols(); ++j) aug.at(i, cols_ + j) = rhs.at(i, j);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != cols_ || pivots.back() >= cols_)
        throw NotInvertibleError("solve: singular matrix");
    RatMatrix out(rows_, rhs.cols());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rhs.cols(); ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

IntMatrix RatMatrix::to_int_matrix() const {
    IntMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (!is_integer(at(i, j)))
                throw InternalError("to_int_matrix: non-integral entry " + at(i, j).get_str());
            out.at(i, j) = at(i, j).get_num();
        }
    return out;
}

} // namespace tpqr
