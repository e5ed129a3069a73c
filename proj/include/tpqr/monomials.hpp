#pragma once

#include "tpqr/picard.hpp"

#include <array>

namespace tpqr::monomials {

// Degree-one and degree-two monomials in the plane coordinates u, v, w,
// indexed deterministically. Degree-one index m runs 1..3 (u,v,w).
inline constexpr std::array<const char*, 3> degree_one{"u", "v", "w"};
inline constexpr std::array<const char*, 6> degree_two{"u^2", "uv", "v^2", "vw", "w^2", "wu"};

// Exponent triples of the degree-two monomials, order matching degree_two.
inline constexpr std::array<std::array<int, 3>, 6> degree_two_exponents{
    {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}, {1, 0, 1}}};

// Index in degree_two of the product of degree-one monomials m1 * m2.
inline int product_index(int m1, int m2) {
    if (m1 > m2) std::swap(m1, m2);
    if (m1 == 1 && m2 == 1) return 0;
    if (m1 == 1 && m2 == 2) return 1;
    if (m1 == 2 && m2 == 2) return 2;
    if (m1 == 2 && m2 == 3) return 3;
    if (m1 == 3 && m2 == 3) return 4;
    return 5; // u*w
}

inline bool degree_two_divisible_by(int idx, int var) {
    return degree_two_exponents[idx][var - 1] > 0;
}

// Variable vanishing on the base point of each chain: the P-chain point lies
// on w = 0, the Q-chain point on u = 0, the R-chain point on v = 0.
inline int killing_variable(Chain c) {
    switch (c) {
    case Chain::P: return 3;
    case Chain::Q: return 1;
    default: return 2;
    }
}

// First index of the cyclic survivor pair (kill+1, kill+2); products of the
// chain generator with either survivor coincide.
inline int first_survivor(Chain c) { return killing_variable(c) % 3 + 1; }
inline int second_survivor(Chain c) { return (killing_variable(c) + 1) % 3 + 1; }

} // namespace tpqr::monomials
