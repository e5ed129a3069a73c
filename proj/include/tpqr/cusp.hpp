#pragma once

#include <string>
#include <vector>

namespace tpqr {

// Cyclic sequence of negated self-intersections of a cycle of rational
// curves, stored in canonical form: lexicographically minimal over all
// rotations and reflections. Entries must be >= 2; length-1 and length-2
// cycles are admitted with the same uniform bound.
class CycleSeq {
public:
    explicit CycleSeq(std::vector<long> entries); // throws NotACycleError

    const std::vector<long>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }
    bool all_twos() const;

    bool operator==(const CycleSeq&) const = default;

private:
    std::vector<long> entries_;
};

// Cycle of the triangle configuration dual to the (p,q,r) singularity:
// canonical form of (p-1, q-1, r-1). Requires p,q,r >= 3.
CycleSeq triangle_cycle(int p, int q, int r);

// One block of the cyclic word: an entry head_excess + 3 followed by its
// maximal run of two_run entries equal to 2.
struct CycleBlock {
    long head_excess = 0;
    long two_run = 0;
    bool operator==(const CycleBlock&) const = default;
};

// Unique block decomposition; requires at least one entry >= 3 (throws
// NotHyperbolicError on the all-twos cycle).
std::vector<CycleBlock> block_decomposition(const CycleSeq& c);
CycleSeq assemble_blocks(const std::vector<CycleBlock>& blocks);

// Dual cycle: each block (k+3, 2^l) becomes (l+3, 2^k) and the cyclic block
// order is reversed. An involution on canonical forms.
CycleSeq dual_cycle(const CycleSeq& c);

// Additive companion invariant sum(b_i - 3) + n.
long charge(const CycleSeq& c);

std::string to_string(const CycleSeq& c);

} // namespace tpqr
