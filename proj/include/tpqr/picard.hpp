#pragma once

#include "tpqr/int_matrix.hpp"

#include <string>
#include <vector>

namespace tpqr {

// The configuration (p,q,r) of the surface Y_{p,q,r}: an iterated blow-up of
// the plane at three collinear points, p, q and r infinitely-near times each.
struct Triple {
    int p = 0;
    int q = 0;
    int r = 0;

    bool operator==(const Triple&) const = default;
    int chain_sum() const { return p + q + r; }
    int object_count() const { return p + q + r + 3; }
    int pic_rank() const { return 1 + p + q + r; }
};

enum class Chain { P = 0, Q = 1, R = 2 };

inline const char* chain_name(Chain c) { return c == Chain::P ? "P" : (c == Chain::Q ? "Q" : "R"); }

// Divisor class on Y_{p,q,r} in the basis (l; f^P_1..f^P_p; f^Q_*; f^R_*),
// where l is the hyperplane total transform and f^X_i the total transform of
// the i-th exceptional class of chain X. Intersection form: l.l = 1,
// f.f = -1, distinct basis classes orthogonal.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(const Triple& t) : cfg_(t), coeff_(t.pic_rank()) {}

    const Triple& config() const { return cfg_; }
    int dim() const { return static_cast<int>(coeff_.size()); }

    Int& ell() { return coeff_[0]; }
    const Int& ell() const { return coeff_[0]; }
    Int& f(Chain c, int i) { return coeff_[f_index(c, i)]; }
    const Int& f(Chain c, int i) const { return coeff_[f_index(c, i)]; }
    const std::vector<Int>& coefficients() const { return coeff_; }

    bool operator==(const DivisorClass&) const = default;
    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass scaled(const Int& k) const;

private:
    int f_index(Chain c, int i) const; // i in 1..chain length
    Triple cfg_;
    std::vector<Int> coeff_;
};

Int intersection(const DivisorClass& a, const DivisorClass& b);

// Gram matrix of the intersection form in the fixed basis (determinant -1^...).
IntMatrix intersection_gram(const Triple& t);

int chain_length(const Triple& t, Chain c);

// Basis classes and the named curve classes of the blow-up geometry.
DivisorClass ell_class(const Triple& t);
DivisorClass f_class(const Triple& t, Chain c, int i);
DivisorClass strict_transform_class(const Triple& t, Chain c, int i); // E~_{X,i} = f_i - f_{i-1}, i >= 2
DivisorClass last_exceptional_class(const Triple& t, Chain c);        // E_{X,1} = f_1
DivisorClass htilde_class(const Triple& t);                           // strict transform of the line through the 3 points
DivisorClass boundary_component_class(const Triple& t, int i);        // D_1, D_2, D_3 (i in 1..3)
DivisorClass anticanonical_cycle_class(const Triple& t);              // D = D_1 + D_2 + D_3
DivisorClass canonical_class(const Triple& t);                        // K = -3l + sum of all f

struct NamedClass {
    std::string name;
    DivisorClass divisor;
    Int self_intersection;
};

// Deterministically ordered ledger of the named classes above.
std::vector<NamedClass> named_classes(const Triple& t);

// Objects of the exceptional sequence: the chain sheaves D_{X,j} and the
// pulled-back line bundles O(s), s = 0,1,2, in sequence order.
struct ObjectId {
    enum class Kind { ChainSheaf, LineBundle };
    Kind kind = Kind::LineBundle;
    Chain chain = Chain::P;
    int index = 0; // chain index 1..len, or twist s in 0..2

    static ObjectId chain_sheaf(Chain c, int i) { return {Kind::ChainSheaf, c, i}; }
    static ObjectId line_bundle(int s) { return {Kind::LineBundle, Chain::P, s}; }
    bool operator==(const ObjectId&) const = default;
};

std::vector<ObjectId> exceptional_order(const Triple& t);
std::string object_label(const ObjectId& id);

// K-theory class, (rank, c_1, 2 ch_2); ch_2 is stored doubled so that
// everything stays in integers.
struct ChernCharacter {
    Int rank;
    DivisorClass c1;
    Int ch2_doubled;

    bool operator==(const ChernCharacter&) const = default;
    ChernCharacter operator+(const ChernCharacter& o) const;
    ChernCharacter operator-(const ChernCharacter& o) const;
    ChernCharacter scaled(const Int& k) const;

    // Multiplication by ch O(L) = (1, L, L.L).
    ChernCharacter twisted_by(const DivisorClass& L) const;
};

ChernCharacter chern_character(const ObjectId& id, const Triple& t);

// Class of the pushforward of O_C(d) for a smooth rational curve C on the
// surface: (0, [C], 2d - C.C).
ChernCharacter curve_sheaf_character(const DivisorClass& curve, const Int& degree);

ChernCharacter point_character(const Triple& t); // skyscraper class (0, 0, 2)

// Euler pairing chi(E,F) = sum (-1)^i dim Ext^i(E,F) via Riemann-Roch. The
// argument order and canonical-class term are normalised by the anchor values
// chi(O,O) = 1, chi(O,O(1)) = 3, chi(D_{P,j},D_{P,k}) = 0 for j < k, and
// chi(D_{P,j},O(s)) = 1.
Int euler_pairing(const ChernCharacter& e, const ChernCharacter& f);

// Matrix of [E] -> [E (x) O(L)] on K_0 in the exceptional-object basis.
IntMatrix twist_matrix(const DivisorClass& L, const Triple& t);

// Euler pairing matrix of the exceptional sequence (Riemann-Roch side).
IntMatrix euler_pairing_matrix(const Triple& t);

} // namespace tpqr
