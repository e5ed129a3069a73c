#pragma once

#include "tpqr/fukaya.hpp"
#include "tpqr/picard.hpp"
#include "tpqr/quiver.hpp"
#include "tpqr/sheafalg.hpp"
#include "tpqr/smith.hpp"

#include <functional>

namespace tpqr {

// Outcome of matching two graded algebras through a basis relabelling:
// object-by-object dimension comparison first, then every structure
// constant.
struct AlgebraIsoReport {
    long pairs_checked = 0;
    long constants_checked = 0;
    std::vector<std::string> dim_mismatches;
    std::vector<std::string> basis_mismatches;
    std::vector<std::string> constant_mismatches;

    bool clean() const {
        return dim_mismatches.empty() && basis_mismatches.empty() && constant_mismatches.empty();
    }
};

// Relabelling of the directed-algebra basis onto the sheaf-side basis:
// e -> eh, x -> xh, y^X_{i,k} -> yh^X_{i,k-1}, the a/c triples onto u, v, w
// and the b's onto the quadratic monomials.
std::string phi_morphism_label(const std::string& fukaya_label);

AlgebraIsoReport compare_structure_constants(
    const GradedQuiverAlgebra& a, const GradedQuiverAlgebra& b,
    const std::function<std::string(const std::string&)>& label_map);

AlgebraIsoReport check_phi_A(const Triple& t);

struct SquareCheck {
    std::string name;
    bool passed = false;
    std::string details;
};

struct SquareReport {
    std::vector<SquareCheck> checks;
    bool passed() const;
};

// Commutation of the two restriction routes on objects, plus the collapse
// pattern of the morphism generators.
SquareReport check_restriction_square(const Triple& t);

struct EulerCrosscheck {
    IntMatrix quiver_side;
    IntMatrix riemann_roch_side;
    bool equal = false;
};

EulerCrosscheck euler_crosscheck(const Triple& t);

// K-classes of an exceptional collection as coordinate columns in the
// initial basis, together with the ambient pairing fixed once; the Euler
// matrix is always the Gram matrix of the stored classes.
struct ExceptionalCollectionState {
    IntMatrix ambient;
    std::vector<std::vector<Int>> classes;

    int size() const { return static_cast<int>(classes.size()); }
    Int pair(int i, int j) const;
    IntMatrix euler() const;
};

ExceptionalCollectionState initial_collection(IntMatrix pairing);

enum class MutationDirection { Left, Right };

// K-level mutation at the adjacent pair (slot, slot+1), 1-based slot.
ExceptionalCollectionState mutate(const ExceptionalCollectionState& state, int slot,
                                  MutationDirection dir);

struct SerreTwistReport {
    IntMatrix from_euler;  // coxeter_matrix of the directed algebra's Euler matrix
    IntMatrix from_twist;  // twist by K on the Riemann-Roch side
    bool equal = false;
    bool preserves_pairing = false; // S^T chi S = chi
};

SerreTwistReport serre_vs_twist(const Triple& t);

struct LocalizationResult {
    IntMatrix i_minus_s;
    int free_rank = 0;
    std::vector<Int> torsion;
    bool pipelines_agree = false;
};

// Cokernel invariants of I - S: the K_0 shadow of inverting the natural
// transformation from the Serre-type endofunctor to the identity.
LocalizationResult k0_localization(const Triple& t);

struct VanishingCycleEntry {
    std::string cycle_label;          // vanishing cycle of the singularity, e.g. "P_1"
    std::string curve_label;          // matched exceptional curve, e.g. "E~_{P,p}"
    ChernCharacter cone_class;        // class of the connecting cone of adjacent thimbles
    ChernCharacter structure_sheaf;   // ch of the curve's structure sheaf
    ChernCharacter twisted_sheaf;     // ch of its degree -1 twist
    bool matches_minus_twisted = false;
    Int cone_self_pairing;
    Int sheaf_self_pairing;
};

struct VanishingCycleLedger {
    Triple config;
    std::vector<VanishingCycleEntry> entries;
    ChernCharacter htilde_sheaf;     // image of the cycle A
    ChernCharacter htilde_twisted;   // image of the cycle B
    bool htilde_difference_is_point = false;
    Int htilde_self_pairing;
    std::string gauge;
};

VanishingCycleLedger vanishing_cycle_classes(const Triple& t);

} // namespace tpqr
