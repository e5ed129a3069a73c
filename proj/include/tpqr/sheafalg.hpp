#pragma once

#include "tpqr/fukaya.hpp"
#include "tpqr/picard.hpp"
#include "tpqr/quiver.hpp"

#include <array>

namespace tpqr {

// The sheaf-side algebra on the exceptional sequence, assembled from the
// known hom dimensions and monomial product rules rather than from a path
// quotient: the block between the line bundles multiplies as polynomials in
// u, v, w; each chain generator is annihilated exactly by the sections
// divisible by the variable cutting out its base point.
GradedQuiverAlgebra build_sheaf_algebra(const Triple& t);

struct RestrictionTarget {
    enum class Kind { SkyscraperResolution, LineBundle };
    Kind kind = Kind::LineBundle;
    int point = 0;                        // 1..3 for the skyscraper at s_i
    std::array<int, 3> multidegree{0, 0, 0};
    Rat gluing_parameter{0};

    bool operator==(const RestrictionTarget&) const = default;
};

std::string target_description(const RestrictionTarget& t);

// Object-level images of the exceptional sequence under restriction to the
// anticanonical cycle, with the multidegree ledger for the line bundles.
struct RestrictionImages {
    Triple config;
    std::vector<std::pair<std::string, RestrictionTarget>> entries; // sequence order
};

RestrictionImages restriction_images(const Triple& t);

RestrictionTarget skyscraper_target(int point);
RestrictionTarget line_bundle_target(int s);

// Graded hom dimensions between the four split-generators of the fibre
// category on the sheaf side: the skyscraper resolutions at s_1, s_2, s_3
// and the structure sheaf of the cycle.
struct FiberSheafDims {
    std::vector<std::string> objects; // O_{s_1}, O_{s_2}, O_{s_3}, O_D
    DimTable dims;
};

FiberSheafDims fiber_sheaf_dims();

} // namespace tpqr
