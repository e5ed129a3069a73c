#include "tpqr/cusp.hpp"

#include "tpqr/errors.hpp"

#include <algorithm>

namespace tpqr {

namespace {

std::vector<long> canonical_form(std::vector<long> v) {
    const size_t n = v.size();
    std::vector<long> best = v;
    std::vector<long> reversed(v.rbegin(), v.rend());
    for (const std::vector<long>* base : {&v, &reversed}) {
        std::vector<long> rot = *base;
        for (size_t k = 0; k < n; ++k) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
    }
    return best;
}

} // namespace

CycleSeq::CycleSeq(std::vector<long> entries) {
    if (entries.empty()) throw NotACycleError("cycle: at least one component required");
    for (long b : entries)
        if (b < 2)
            throw NotACycleError("cycle: entry " + std::to_string(b) +
                                 " < 2 is not the negated self-intersection of a cycle component");
    entries_ = canonical_form(std::move(entries));
}

bool CycleSeq::all_twos() const {
    return std::all_of(entries_.begin(), entries_.end(), [](long b) { return b == 2; });
}

CycleSeq triangle_cycle(int p, int q, int r) {
    return CycleSeq({static_cast<long>(p) - 1, static_cast<long>(q) - 1, static_cast<long>(r) - 1});
}

std::vector<CycleBlock> block_decomposition(const CycleSeq& c) {
    if (c.all_twos())
        throw NotHyperbolicError(
            "dual cycle undefined: the all-twos cycle is the simple-elliptic boundary case");
    const std::vector<long>& e = c.entries();
    const int n = c.length();
    int start = 0;
    while (e[start] < 3) ++start; // exists by the hyperbolicity check
    std::vector<CycleBlock> blocks;
    int i = start;
    do {
        CycleBlock block;
        block.head_excess = e[i] - 3;
        i = (i + 1) % n;
        while (i != start && e[i] == 2) {
            ++block.two_run;
            i = (i + 1) % n;
        }
        blocks.push_back(block);
    } while (i != start);
    return blocks;
}

CycleSeq assemble_blocks(const std::vector<CycleBlock>& blocks) {
    std::vector<long> entries;
    for (const CycleBlock& b : blocks) {
        entries.push_back(b.head_excess + 3);
        for (long i = 0; i < b.two_run; ++i) entries.push_back(2);
    }
    return CycleSeq(std::move(entries));
}

CycleSeq dual_cycle(const CycleSeq& c) {
    std::vector<CycleBlock> blocks = block_decomposition(c);
    std::vector<CycleBlock> dual;
    dual.reserve(blocks.size());
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        dual.push_back(CycleBlock{it->two_run, it->head_excess});
    return assemble_blocks(dual);
}

long charge(const CycleSeq& c) {
    long sum = 0;
    for (long b : c.entries()) sum += b - 3;
    return sum + c.length();
}

std::string to_string(const CycleSeq& c) {
    std::string s = "(";
    for (int i = 0; i < c.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.entries()[i]);
    }
    return s + ")";
}

} // namespace tpqr
