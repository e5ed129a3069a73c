#pragma once

#include "tpqr/picard.hpp"
#include "tpqr/quiver.hpp"

#include <array>

namespace tpqr {

// Object bookkeeping for the ordered collection P_1..P_p, Q_1..Q_q,
// R_1..R_r, E_1, E_2, E_3.
struct FukayaObjects {
    Triple config;

    int count() const { return config.object_count(); }
    int chain_object(Chain c, int i) const; // 0-based object index, i in 1..len
    int e_object(int k) const;              // k in 1..3
    std::vector<std::string> labels() const;
};

// Quiver presentation of the directed algebra: per chain the degree-0/1
// arrow pairs e, x plus the connecting arrow y into E_1, and the two triples
// a, c between the E objects; relations are the adjacent anticommutation
// x_i e_{i+1} = -e_i x_{i+1}, the vanishing products x x and x y, the
// commutation a_i c_{i+1} = a_{i+1} c_i, and the annihilation pattern of the
// y's against the a's.
struct DirectedQuiverData {
    Quiver quiver;
    std::vector<Relation> relations;
    std::array<std::vector<int>, 3> e_arrows; // [chain][i-1] = arrow of e_{i,i+1}
    std::array<std::vector<int>, 3> x_arrows;
    std::array<int, 3> y_arrow{-1, -1, -1};
    std::array<int, 3> a_arrows{-1, -1, -1};
    std::array<int, 3> c_arrows{-1, -1, -1};
};

DirectedQuiverData fukaya_quiver(const Triple& t);

// The directed algebra in its canonical basis e^X_{i,j}, x^X_{i,j},
// y^X_{i,k}, a_m, b_*, c_m. All structure constants are integral.
GradedQuiverAlgebra build_directed_algebra(const Triple& t);

using DimTable = std::map<std::pair<int, int>, std::map<int, int>>;

DimTable algebra_dim_table(const GradedQuiverAlgebra& alg);

// Closed-form graded dimensions: units; (1,1) in degrees (0,1) for chain
// pairs; 1 for chain -> E_k; 3, 3, 6 for the E block.
DimTable expected_dim_table(const Triple& t);
long expected_total_dimension(const Triple& t);

// Graded-dimension and action model of the fibre category on the same
// objects: hom_B(X,Y) = hom_A(X,Y) + hom_A(Y,X)^dual with dual degree
// d -> 1-d.
class BimoduleModel {
public:
    explicit BimoduleModel(GradedQuiverAlgebra diagonal_algebra);

    const GradedQuiverAlgebra& diagonal() const { return a_; }
    int object_count() const { return a_.object_count(); }

    struct Elem {
        bool dual = false;
        int index = 0;
    };

    std::vector<Elem> basis(int x, int y) const; // plain summand first, then duals
    int elem_degree(int x, int y, const Elem& m) const;
    std::map<int, int> graded_dims(int x, int y) const;
    Int euler_antisymmetrized(int x, int y) const;

    // a * m for a in hom_A(w,x), m in hom_B(x,y); coefficients over basis(w,y).
    std::vector<Rat> left_action(int w, int x, int y, int a, const Elem& m) const;
    // m * b for b in hom_A(y,z); coefficients over basis(x,z).
    std::vector<Rat> right_action(int x, int y, int z, const Elem& m, int b) const;

private:
    GradedQuiverAlgebra a_;
};

BimoduleModel build_fiber_bimodule(const Triple& t);

// Cohomology-level restriction onto the fibre: objects collapse onto
// P, Q, R, E, E', E''; chain morphisms collapse onto the circle algebra of
// the fibre Lagrangian, and the y/a/b/c generators onto their fibre
// counterparts.
struct RestrictionFunctor {
    Triple config;
    std::vector<std::string> fibre_objects;
    std::vector<int> object_map;   // source object index -> fibre object index
    GradedQuiverAlgebra fibre;     // product model on the image generators

    struct Image {
        Rat coef;
        int basis_index = -1;
    };
    std::vector<std::vector<Image>> images; // [i*n+j][basis index]

    const Image& image(int i, int j, int a) const;

    struct LawReport {
        long pairs_checked = 0;
        std::vector<std::string> violations;
        bool passed() const { return violations.empty(); }
    };
    LawReport check_functor_law(const GradedQuiverAlgebra& a) const;
};

RestrictionFunctor restrict_to_fiber(const Triple& t);

// Matrix of the K_0 Serre transformation: the unique S with
// chi(x, y) = chi(y, S x); for unitriangular chi this is chi^-1 chi^T.
IntMatrix coxeter_matrix(const IntMatrix& chi);

} // namespace tpqr
