#include "tpqr/errors.hpp"
#include "tpqr/smith.hpp"

#include <doctest.h>

#include <random>

using namespace tpqr;

namespace {

IntMatrix diag(const std::vector<long>& entries) {
    IntMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
    return m;
}

// Independent oracle: d_k = gcd of all k x k minors, invariant factors are
// the successive quotients. Exponential in the size, fine for <= 4x4.
Int minor_gcd(const IntMatrix& m, int k) {
    std::vector<int> rows(k), cols(k);
    Int g = 0;
    auto det_submatrix = [&m](const std::vector<int>& rs, const std::vector<int>& cs) {
        IntMatrix sub(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rs[i], cs[j]);
        return sub.determinant();
    };
    auto choose = [](int n, int k, auto&& visit) {
        std::vector<int> idx(k);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == k) {
                visit(idx);
                return;
            }
            for (int i = start; i <= n - (k - depth); ++i) {
                idx[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    };
    choose(m.rows(), k, [&](const std::vector<int>& rs) {
        choose(m.cols(), k, [&](const std::vector<int>& cs) {
            Int d = det_submatrix(rs, cs);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        });
    });
    return g;
}

std::vector<Int> smith_via_minor_gcds(const IntMatrix& m) {
    const int k = std::min(m.rows(), m.cols());
    std::vector<Int> out(k);
    Int prev = 1;
    for (int i = 1; i <= k; ++i) {
        Int d = minor_gcd(m, i);
        if (d == 0) {
            for (int j = i - 1; j < k; ++j) out[j] = 0;
            return out;
        }
        out[i - 1] = d / prev;
        prev = d;
    }
    return out;
}

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

IntMatrix random_unimodular(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    IntMatrix m = IntMatrix::identity(n);
    for (int step = 0; step < 3 * n; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Int c = coeff(rng);
        for (int k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
    }
    return m;
}

} // namespace

TEST_CASE("smith normal form on the pinned examples") {
    CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal == std::vector<Int>{1, 1, 1});
    CHECK(smith_normal_form(diag({2, 3})).diagonal == std::vector<Int>{1, 6});
    CHECK(smith_normal_form(diag({0, 0})).diagonal == std::vector<Int>{0, 0});
}

TEST_CASE("smith normal form agrees with the minor-gcd oracle") {
    std::mt19937 rng(20240701);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + trial % 4;
        const int cols = 1 + (trial / 4) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, 6);
        CHECK(smith_normal_form(m).diagonal == smith_via_minor_gcds(m));
    }
}

TEST_CASE("smith diagonal satisfies the divisibility chain") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        IntMatrix m = random_matrix(rng, 2 + trial % 4, 2 + (trial / 3) % 4, 9);
        const auto d = smith_normal_form(m).diagonal;
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i] == 0) {
                CHECK(d[i + 1] == 0);
            } else {
                CHECK(d[i + 1] % d[i] == 0);
            }
        }
    }
}

TEST_CASE("transform matrices reconstruct the diagonal exactly") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m = random_matrix(rng, 2 + trial % 3, 2 + (trial / 2) % 3, 8);
        const SmithTransforms st = smith_normal_form_with_transforms(m);
        IntMatrix product = st.row_ops * m * st.col_ops;
        IntMatrix expected(m.rows(), m.cols());
        for (size_t i = 0; i < st.smith.diagonal.size(); ++i)
            expected.at(static_cast<int>(i), static_cast<int>(i)) = st.smith.diagonal[i];
        CHECK(product == expected);
        CHECK(abs(st.row_ops.determinant()) == 1);
        CHECK(abs(st.col_ops.determinant()) == 1);
    }
}

TEST_CASE("cokernel invariants on the pinned examples") {
    CHECK(cokernel_invariants(IntMatrix::identity(4)) == CokernelInvariants{0, {}});
    CHECK(cokernel_invariants(diag({0})) == CokernelInvariants{1, {}});
    CHECK(cokernel_invariants(diag({2, 3})) == CokernelInvariants{0, {6}});
}

TEST_CASE("cokernel invariants are unimodular-stable") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + trial % 4;
        IntMatrix m = random_matrix(rng, n, n, 5);
        const CokernelInvariants base = cokernel_invariants(m);
        IntMatrix u = random_unimodular(rng, n);
        IntMatrix v = random_unimodular(rng, n);
        CHECK(cokernel_invariants(u * m) == base);
        CHECK(cokernel_invariants(m * v) == base);
        CHECK(cokernel_invariants(u * m * v) == base);
    }
}

TEST_CASE("upper unitriangular predicate") {
    CHECK(is_upper_unitriangular(IntMatrix::identity(5)));
    CHECK(is_upper_unitriangular(IntMatrix::from_rows({{1, 3}, {0, 1}})));
    CHECK_FALSE(is_upper_unitriangular(IntMatrix::from_rows({{1, 0}, {2, 1}})));
    CHECK_FALSE(is_upper_unitriangular(IntMatrix::from_rows({{2, 0}, {0, 1}})));
}

TEST_CASE("unimodular inverse round-trips") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 4;
        IntMatrix u = random_unimodular(rng, n);
        CHECK(u * u.inverse_unimodular() == IntMatrix::identity(n));
    }
    CHECK_THROWS_AS(diag({2, 1}).inverse_unimodular(), NotInvertibleError);
}
