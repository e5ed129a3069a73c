#include "tpqr/smith.hpp"

#include "tpqr/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace tpqr {

int SmithDecomposition::rank() const {
    int r = 0;
    for (const Int& d : diagonal)
        if (d != 0) ++r;
    return r;
}

std::vector<Int> SmithDecomposition::torsion() const {
    std::vector<Int> t;
    for (const Int& d : diagonal)
        if (d > 1) t.push_back(d);
    return t;
}

namespace {

struct Worker {
    IntMatrix a;
    IntMatrix u; // row ops accumulate here
    IntMatrix v; // col ops accumulate here

    explicit Worker(const IntMatrix& m)
        : a(m), u(IntMatrix::identity(m.rows())), v(IntMatrix::identity(m.cols())) {}

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const Int& factor) { // row_dst += factor * row_src
        for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += factor * a.at(src, c);
        for (int c = 0; c < u.cols(); ++c) u.at(dst, c) += factor * u.at(src, c);
    }
    void add_col(int dst, int src, const Int& factor) {
        for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += factor * a.at(r, src);
        for (int r = 0; r < v.rows(); ++r) v.at(r, dst) += factor * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }

    // Smallest nonzero |entry| in the trailing submatrix; keeps intermediate growth down.
    bool move_min_pivot(int t) {
        int bi = -1, bj = -1;
        Int best;
        for (int i = t; i < a.rows(); ++i)
            for (int j = t; j < a.cols(); ++j) {
                if (a.at(i, j) == 0) continue;
                Int mag = abs(a.at(i, j));
                if (bi < 0 || mag < best) {
                    best = mag;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void reduce(int t) {
        for (;;) {
            if (!move_min_pivot(t)) return;
            bool dirty = false;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                add_row(i, t, -q);
                if (a.at(i, t) != 0) dirty = true; // remainder became the new smaller candidate
            }
            if (dirty) continue;
            for (int j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            // Row and column are clear; force divisibility of the rest of the block.
            bool divisible = true;
            for (int i = t + 1; i < a.rows() && divisible; ++i)
                for (int j = t + 1; j < a.cols() && divisible; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_row(t, i, 1);
                        divisible = false;
                    }
            if (divisible) return;
        }
    }

    SmithDecomposition run() {
        const int k = std::min(a.rows(), a.cols());
        for (int t = 0; t < k; ++t) {
            reduce(t);
            if (a.at(t, t) < 0) negate_row(t);
        }
        SmithDecomposition out;
        out.diagonal.resize(k);
        for (int t = 0; t < k; ++t) out.diagonal[t] = a.at(t, t);
        for (int t = 0; t + 1 < k; ++t) {
            const Int& d0 = out.diagonal[t];
            const Int& d1 = out.diagonal[t + 1];
            const bool ok = (d0 == 0) ? (d1 == 0) : (d1 % d0 == 0);
            if (!ok) throw InternalError("smith_normal_form: divisibility chain broken");
        }
        return out;
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    Worker w(m);
    return w.run();
}

SmithTransforms smith_normal_form_with_transforms(const IntMatrix& m) {
    Worker w(m);
    SmithTransforms out;
    out.smith = w.run();
    out.row_ops = w.u;
    out.col_ops = w.v;
    return out;
}

CokernelInvariants cokernel_invariants(const IntMatrix& m) {
    SmithDecomposition d = smith_normal_form(m);
    CokernelInvariants out;
    out.free_rank = m.cols() - d.rank();
    out.torsion = d.torsion();
    return out;
}

bool is_upper_unitriangular(const IntMatrix& m) { return m.is_upper_unitriangular(); }

} // namespace tpqr
