#pragma once

#include "tpqr/int_matrix.hpp"

#include <vector>

namespace tpqr {

// Diagonal of a Smith normal form: non-negative d_1 | d_2 | ... | d_k,
// k = min(rows, cols), trailing zeros allowed.
struct SmithDecomposition {
    std::vector<Int> diagonal;

    int rank() const;
    std::vector<Int> torsion() const; // diagonal entries > 1, in chain order
};

// Full decomposition U * m * V = diag(d_1, ..., d_k) with U, V unimodular.
struct SmithTransforms {
    SmithDecomposition smith;
    IntMatrix row_ops; // U, rows x rows
    IntMatrix col_ops; // V, cols x cols
};

SmithDecomposition smith_normal_form(const IntMatrix& m);
SmithTransforms smith_normal_form_with_transforms(const IntMatrix& m);

struct CokernelInvariants {
    int free_rank = 0;
    std::vector<Int> torsion;
    bool operator==(const CokernelInvariants&) const = default;
};

// Invariants of coker(m : Z^cols -> Z^rows)... free rank counts cols - rank
// so that coker of a square endomorphism matrix has the expected meaning.
CokernelInvariants cokernel_invariants(const IntMatrix& m);

bool is_upper_unitriangular(const IntMatrix& m);

} // namespace tpqr
