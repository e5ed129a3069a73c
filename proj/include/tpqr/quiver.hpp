#pragma once

#include "tpqr/int_matrix.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace tpqr {

// Directed, loop-free quiver on an ordered object set. Arrows only run from
// earlier objects to later ones; endomorphisms are spanned by the units.
struct Arrow {
    int src = 0;
    int tgt = 0;
    int degree = 0;
    std::string label;
};

struct Quiver {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;

    int object_count() const { return static_cast<int>(objects.size()); }
    void validate() const; // throws GradingError on backward arrows or loops
};

using Path = std::vector<int>; // arrow indices, composable left to right; empty = unit

struct PathTerm {
    Rat coef;
    Path path;
};
using PathExpr = std::vector<PathTerm>;

// Homogeneous two-sided relation: a rational combination of parallel paths.
struct Relation {
    PathExpr terms;
};

int path_degree(const Quiver& q, const Path& p);
std::string path_label(const Quiver& q, const Path& p);

// All directed paths from src to tgt, in depth-first order following arrow
// indices. Finite because the quiver is directed and loop-free.
std::vector<Path> path_space(const Quiver& q, int src, int tgt);

// Basis of path_space(src,tgt) modulo the degree-graded subspace spanned by
// u * rel * v over all relations and path prefixes/suffixes, together with
// the reduction map onto that basis.
class QuotientBasis {
public:
    QuotientBasis(const Quiver& q, const std::vector<Relation>& relations, int src, int tgt);

    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<Path>& basis_paths() const { return basis_; }
    std::map<int, int> graded_dims() const;

    // Expansion of a path combination over basis_paths.
    std::vector<Rat> reduce(const PathExpr& expr) const;

private:
    const Quiver* quiver_;
    int src_, tgt_;
    std::vector<Path> paths_;          // full path space, enumeration order
    std::map<Path, int> path_index_;
    std::map<int, std::vector<Rat>> rows_; // reduced echelon rows keyed by leading index
    std::vector<Path> basis_;
    std::vector<int> basis_pos_;       // path index -> basis position (or -1)
};

struct BasisElement {
    std::string label;
    int degree = 0;
};

// Finite graded algebra over the semisimple unit ring of an ordered object
// set: per-pair graded hom bases plus exact structure constants in
// diagrammatic order (f: X->Y then g: Y->Z composes to f*g: X->Z).
// Diagonal basis index 0 is always the unit.
class GradedQuiverAlgebra {
public:
    std::vector<std::string> objects;
    std::vector<std::vector<BasisElement>> hom;                               // [i*n+j]
    std::map<std::tuple<int, int, int>, std::vector<std::vector<std::vector<Rat>>>> products;

    int object_count() const { return static_cast<int>(objects.size()); }
    const std::vector<BasisElement>& basis(int i, int j) const { return hom[index(i, j)]; }
    std::vector<BasisElement>& basis_mut(int i, int j) { return hom[index(i, j)]; }
    int dim(int i, int j) const { return static_cast<int>(basis(i, j).size()); }
    std::map<int, int> graded_dims(int i, int j) const;
    long total_dimension() const;

    // Coefficients of basis(i,j)[a] * basis(j,k)[b] over basis(i,k).
    std::vector<Rat> compose(int i, int j, int k, int a, int b) const;
    Rat& product_coefficient(int i, int j, int k, int a, int b, int c);

    int find_basis(int i, int j, const std::string& label) const; // -1 if absent

    bool all_constants_integral() const;

private:
    int index(int i, int j) const { return i * object_count() + j; }
};

// Per-pair named basis with explicit path representatives; used to export a
// quotient algebra in a chosen basis.
struct NamedBasisSpec {
    std::vector<BasisElement> elements;
    std::vector<PathExpr> reps;
};

GradedQuiverAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& relations);
GradedQuiverAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& relations,
                                  const std::map<std::pair<int, int>, NamedBasisSpec>& named);

// For algebras assembled by hand: install unit rows/columns for every
// nonzero hom space (diagonal index 0 composes as identity).
void fill_unit_products(GradedQuiverAlgebra& alg);

struct AlgebraCheckReport {
    long associativity_checks = 0;
    long unit_checks = 0;
    long degree_checks = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

// Exhaustive associativity, two-sided unit law and degree-additivity check
// over all composable basis tuples.
AlgebraCheckReport verify_associativity(const GradedQuiverAlgebra& alg);

// Signed sums of graded hom dimensions; diagonal 1 for directed algebras.
IntMatrix euler_matrix(const GradedQuiverAlgebra& alg);

} // namespace tpqr
