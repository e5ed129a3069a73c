#include "tpqr/fukaya.hpp"

#include "tpqr/errors.hpp"
#include "tpqr/monomials.hpp"

namespace tpqr {

int FukayaObjects::chain_object(Chain c, int i) const {
    const int len = chain_length(config, c);
    if (i < 1 || i > len) throw InternalError("FukayaObjects: chain index out of range");
    int base = 0;
    if (c == Chain::Q) base = config.p;
    if (c == Chain::R) base = config.p + config.q;
    return base + (i - 1);
}

int FukayaObjects::e_object(int k) const {
    if (k < 1 || k > 3) throw InternalError("FukayaObjects: E index out of range");
    return config.chain_sum() + (k - 1);
}

std::vector<std::string> FukayaObjects::labels() const {
    std::vector<std::string> out;
    for (Chain c : {Chain::P, Chain::Q, Chain::R})
        for (int i = 1; i <= chain_length(config, c); ++i)
            out.push_back(std::string(chain_name(c)) + "_" + std::to_string(i));
    for (int k = 1; k <= 3; ++k) out.push_back("E_" + std::to_string(k));
    return out;
}

namespace {

std::string subscript_pair(int i, int j) {
    return "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

} // namespace

DirectedQuiverData fukaya_quiver(const Triple& t) {
    if (t.p < 1 || t.q < 1 || t.r < 1) throw ConfigMismatchError("fukaya_quiver: p,q,r must be >= 1");
    FukayaObjects objs{t};
    DirectedQuiverData data;
    data.quiver.objects = objs.labels();

    auto add_arrow = [&data](int src, int tgt, int degree, std::string label) {
        data.quiver.arrows.push_back(Arrow{src, tgt, degree, std::move(label)});
        return static_cast<int>(data.quiver.arrows.size()) - 1;
    };

    for (Chain c : {Chain::P, Chain::Q, Chain::R}) {
        const int ci = static_cast<int>(c);
        const int n = chain_length(t, c);
        for (int i = 1; i <= n - 1; ++i) {
            data.e_arrows[ci].push_back(add_arrow(objs.chain_object(c, i), objs.chain_object(c, i + 1), 0,
                                                  std::string("e^") + chain_name(c) + subscript_pair(i, i + 1)));
            data.x_arrows[ci].push_back(add_arrow(objs.chain_object(c, i), objs.chain_object(c, i + 1), 1,
                                                  std::string("x^") + chain_name(c) + subscript_pair(i, i + 1)));
        }
        data.y_arrow[ci] = add_arrow(objs.chain_object(c, n), objs.e_object(1), 0,
                                     std::string("y^") + chain_name(c));
    }
    for (int m = 1; m <= 3; ++m)
        data.a_arrows[m - 1] = add_arrow(objs.e_object(1), objs.e_object(2), 0, "a_" + std::to_string(m));
    for (int m = 1; m <= 3; ++m)
        data.c_arrows[m - 1] = add_arrow(objs.e_object(2), objs.e_object(3), 0, "c_" + std::to_string(m));

    auto rel = [&data](PathExpr terms) { data.relations.push_back(Relation{std::move(terms)}); };

    for (Chain c : {Chain::P, Chain::Q, Chain::R}) {
        const int ci = static_cast<int>(c);
        const int n = chain_length(t, c);
        for (int i = 1; i <= n - 2; ++i) {
            const int e_i = data.e_arrows[ci][i - 1], e_n = data.e_arrows[ci][i];
            const int x_i = data.x_arrows[ci][i - 1], x_n = data.x_arrows[ci][i];
            rel({{Rat(1), {x_i, e_n}}, {Rat(1), {e_i, x_n}}}); // x_i e_{i+1} = -e_i x_{i+1}
            rel({{Rat(1), {x_i, x_n}}});
        }
        if (n >= 2) rel({{Rat(1), {data.x_arrows[ci][n - 2], data.y_arrow[ci]}}});
    }
    for (int m = 1; m <= 3; ++m) {
        const int m2 = m % 3 + 1;
        rel({{Rat(1), {data.a_arrows[m - 1], data.c_arrows[m2 - 1]}},
             {Rat(-1), {data.a_arrows[m2 - 1], data.c_arrows[m - 1]}}});
    }
    for (Chain c : {Chain::P, Chain::Q, Chain::R}) {
        const int ci = static_cast<int>(c);
        const int y = data.y_arrow[ci];
        const int kill = monomials::killing_variable(c);
        const int s1 = monomials::first_survivor(c);
        const int s2 = monomials::second_survivor(c);
        rel({{Rat(1), {y, data.a_arrows[kill - 1]}}});
        rel({{Rat(1), {y, data.a_arrows[s1 - 1]}}, {Rat(-1), {y, data.a_arrows[s2 - 1]}}});
    }
    data.quiver.validate();
    return data;
}

namespace {

// Canonical chain representatives put the degree-one arrow in the first slot
// and carry the alternating basis normalisation (-1)^(i-1); with it the
// exported constants for e.x and x.e are both +1 and the adjacent
// anticommutation lives entirely at path level.
PathExpr chain_x_rep(const DirectedQuiverData& d, Chain c, int i, int j) {
    const int ci = static_cast<int>(c);
    Path p{d.x_arrows[ci][i - 1]};
    for (int s = i + 1; s < j; ++s) p.push_back(d.e_arrows[ci][s - 1]);
    return {{(i % 2 == 1) ? Rat(1) : Rat(-1), std::move(p)}};
}

PathExpr chain_e_rep(const DirectedQuiverData& d, Chain c, int i, int j) {
    const int ci = static_cast<int>(c);
    Path p;
    for (int s = i; s < j; ++s) p.push_back(d.e_arrows[ci][s - 1]);
    return {{Rat(1), std::move(p)}};
}

PathExpr chain_y_rep(const DirectedQuiverData& d, const Triple& t, Chain c, int i, int k) {
    const int ci = static_cast<int>(c);
    const int n = chain_length(t, c);
    Path p;
    for (int s = i; s < n; ++s) p.push_back(d.e_arrows[ci][s - 1]);
    p.push_back(d.y_arrow[ci]);
    const int s1 = monomials::first_survivor(c);
    if (k >= 2) p.push_back(d.a_arrows[s1 - 1]);
    if (k == 3) p.push_back(d.c_arrows[s1 - 1]);
    return {{Rat(1), std::move(p)}};
}

} // namespace

GradedQuiverAlgebra build_directed_algebra(const Triple& t) {
    const DirectedQuiverData data = fukaya_quiver(t);
    FukayaObjects objs{t};

    std::map<std::pair<int, int>, NamedBasisSpec> named;
    for (Chain c : {Chain::P, Chain::Q, Chain::R}) {
        const int n = chain_length(t, c);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                NamedBasisSpec spec;
                spec.elements.push_back({std::string("e^") + chain_name(c) + subscript_pair(i, j), 0});
                spec.reps.push_back(chain_e_rep(data, c, i, j));
                spec.elements.push_back({std::string("x^") + chain_name(c) + subscript_pair(i, j), 1});
                spec.reps.push_back(chain_x_rep(data, c, i, j));
                named[{objs.chain_object(c, i), objs.chain_object(c, j)}] = std::move(spec);
            }
            for (int k = 1; k <= 3; ++k) {
                NamedBasisSpec spec;
                spec.elements.push_back({std::string("y^") + chain_name(c) + subscript_pair(i, k), 0});
                spec.reps.push_back(chain_y_rep(data, t, c, i, k));
                named[{objs.chain_object(c, i), objs.e_object(k)}] = std::move(spec);
            }
        }
    }
    {
        NamedBasisSpec a_spec, c_spec, b_spec;
        for (int m = 1; m <= 3; ++m) {
            a_spec.elements.push_back({"a_" + std::to_string(m), 0});
            a_spec.reps.push_back({{Rat(1), {data.a_arrows[m - 1]}}});
            c_spec.elements.push_back({"c_" + std::to_string(m), 0});
            c_spec.reps.push_back({{Rat(1), {data.c_arrows[m - 1]}}});
        }
        const std::array<std::pair<int, int>, 6> b_factors{
            {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 1}}};
        const std::array<const char*, 6> b_labels{"b_1", "b_{1,2}", "b_2", "b_{2,3}", "b_3", "b_{3,1}"};
        for (int idx = 0; idx < 6; ++idx) {
            b_spec.elements.push_back({b_labels[idx], 0});
            b_spec.reps.push_back({{Rat(1),
                                    {data.a_arrows[b_factors[idx].first - 1],
                                     data.c_arrows[b_factors[idx].second - 1]}}});
        }
        named[{objs.e_object(1), objs.e_object(2)}] = std::move(a_spec);
        named[{objs.e_object(2), objs.e_object(3)}] = std::move(c_spec);
        named[{objs.e_object(1), objs.e_object(3)}] = std::move(b_spec);
    }

    GradedQuiverAlgebra alg = build_algebra(data.quiver, data.relations, named);
    if (!alg.all_constants_integral())
        throw InternalError("build_directed_algebra: non-integral structure constant");
    return alg;
}

DimTable algebra_dim_table(const GradedQuiverAlgebra& alg) {
    DimTable out;
    const int n = alg.object_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto dims = alg.graded_dims(i, j);
            if (!dims.empty()) out[{i, j}] = std::move(dims);
        }
    return out;
}

DimTable expected_dim_table(const Triple& t) {
    FukayaObjects objs{t};
    DimTable out;
    for (int i = 0; i < objs.count(); ++i) out[{i, i}] = {{0, 1}};
    for (Chain c : {Chain::P, Chain::Q, Chain::R}) {
        const int n = chain_length(t, c);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j)
                out[{objs.chain_object(c, i), objs.chain_object(c, j)}] = {{0, 1}, {1, 1}};
            for (int k = 1; k <= 3; ++k)
                out[{objs.chain_object(c, i), objs.e_object(k)}] = {{0, 1}};
        }
    }
    out[{objs.e_object(1), objs.e_object(2)}] = {{0, 3}};
    out[{objs.e_object(2), objs.e_object(3)}] = {{0, 3}};
    out[{objs.e_object(1), objs.e_object(3)}] = {{0, 6}};
    return out;
}

long expected_total_dimension(const Triple& t) {
    auto choose2 = [](long n) { return n * (n - 1) / 2; };
    return t.object_count() + 2 * (choose2(t.p) + choose2(t.q) + choose2(t.r)) +
           3L * t.chain_sum() + 12;
}

BimoduleModel::BimoduleModel(GradedQuiverAlgebra diagonal_algebra) : a_(std::move(diagonal_algebra)) {}

std::vector<BimoduleModel::Elem> BimoduleModel::basis(int x, int y) const {
    std::vector<Elem> out;
    for (int a = 0; a < a_.dim(x, y); ++a) out.push_back({false, a});
    for (int a = 0; a < a_.dim(y, x); ++a) out.push_back({true, a});
    return out;
}

int BimoduleModel::elem_degree(int x, int y, const Elem& m) const {
    if (!m.dual) return a_.basis(x, y)[m.index].degree;
    return 1 - a_.basis(y, x)[m.index].degree;
}

std::map<int, int> BimoduleModel::graded_dims(int x, int y) const {
    std::map<int, int> out;
    for (const auto& [d, k] : a_.graded_dims(x, y)) out[d] += k;
    for (const auto& [d, k] : a_.graded_dims(y, x)) out[1 - d] += k;
    return out;
}

Int BimoduleModel::euler_antisymmetrized(int x, int y) const {
    Int sum = 0;
    for (const auto& [d, k] : graded_dims(x, y)) sum += (d % 2 == 0) ? k : -k;
    return sum;
}

std::vector<Rat> BimoduleModel::left_action(int w, int x, int y, int a, const Elem& m) const {
    const int plain = a_.dim(w, y);
    const int dual = a_.dim(y, w);
    std::vector<Rat> out(plain + dual);
    if (!m.dual) {
        if (plain > 0 && a_.dim(w, x) > 0 && a_.dim(x, y) > 0) {
            std::vector<Rat> c = a_.compose(w, x, y, a, m.index);
            for (int i = 0; i < plain; ++i) out[i] = c[i];
        }
    } else {
        // Dual-diagonal action: the coefficient on phi_n' is the n-coefficient
        // of n' * a.
        for (int np = 0; np < dual; ++np) {
            if (a_.dim(y, x) == 0) break;
            std::vector<Rat> c = a_.compose(y, w, x, np, a);
            out[plain + np] = c[m.index];
        }
    }
    return out;
}

std::vector<Rat> BimoduleModel::right_action(int x, int y, int z, const Elem& m, int b) const {
    const int plain = a_.dim(x, z);
    const int dual = a_.dim(z, x);
    std::vector<Rat> out(plain + dual);
    if (!m.dual) {
        if (plain > 0 && a_.dim(x, y) > 0 && a_.dim(y, z) > 0) {
            std::vector<Rat> c = a_.compose(x, y, z, m.index, b);
            for (int i = 0; i < plain; ++i) out[i] = c[i];
        }
    } else {
        for (int np = 0; np < dual; ++np) {
            if (a_.dim(y, x) == 0) break;
            std::vector<Rat> c = a_.compose(y, z, x, b, np);
            out[plain + np] = c[m.index];
        }
    }
    return out;
}

BimoduleModel build_fiber_bimodule(const Triple& t) {
    return BimoduleModel(build_directed_algebra(t));
}

namespace {

// Product model on the fibre objects P, Q, R, E, E', E''. Only the image
// generators of the directed algebra are carried: the circle algebra on each
// chain object, the y generators into the E objects, and the a/b/c block.
GradedQuiverAlgebra fibre_model() {
    GradedQuiverAlgebra alg;
    alg.objects = {"P", "Q", "R", "E", "E'", "E''"};
    alg.hom.resize(36);
    for (int i = 0; i < 6; ++i) alg.basis_mut(i, i).push_back({"1", 0});
    for (int x = 0; x < 3; ++x) {
        const Chain c = static_cast<Chain>(x);
        alg.basis_mut(x, x).push_back({std::string("x^") + chain_name(c), 1});
        for (int k = 1; k <= 3; ++k)
            alg.basis_mut(x, 2 + k).push_back({std::string("y^") + chain_name(c) + "_" + std::to_string(k), 0});
    }
    for (int m = 1; m <= 3; ++m) {
        alg.basis_mut(3, 4).push_back({"a_" + std::to_string(m), 0});
        alg.basis_mut(4, 5).push_back({"c_" + std::to_string(m), 0});
    }
    const std::array<const char*, 6> b_labels{"b_1", "b_{1,2}", "b_2", "b_{2,3}", "b_3", "b_{3,1}"};
    for (const char* lbl : b_labels) alg.basis_mut(3, 5).push_back({lbl, 0});

    fill_unit_products(alg);
    for (int x = 0; x < 3; ++x) {
        const Chain c = static_cast<Chain>(x);
        const int kill = monomials::killing_variable(c);
        // x^X squares to zero and kills the y generators; nothing to store.
        for (int m = 1; m <= 3; ++m) {
            if (m == kill) continue;
            alg.product_coefficient(x, 3, 4, 0, m - 1, 0) = 1; // y_1 * a_m = y_2
            alg.product_coefficient(x, 4, 5, 0, m - 1, 0) = 1; // y_2 * c_m = y_3
        }
        for (int idx = 0; idx < 6; ++idx)
            if (!monomials::degree_two_divisible_by(idx, kill))
                alg.product_coefficient(x, 3, 5, 0, idx, 0) = 1; // y_1 * b = y_3
    }
    for (int m1 = 1; m1 <= 3; ++m1)
        for (int m2 = 1; m2 <= 3; ++m2)
            alg.product_coefficient(3, 4, 5, m1 - 1, m2 - 1, monomials::product_index(m1, m2)) = 1;
    return alg;
}

} // namespace

const RestrictionFunctor::Image& RestrictionFunctor::image(int i, int j, int a) const {
    return images[static_cast<size_t>(i) * config.object_count() + j][a];
}

RestrictionFunctor::LawReport RestrictionFunctor::check_functor_law(const GradedQuiverAlgebra& a) const {
    LawReport report;
    const int n = a.object_count();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                if (a.dim(i, j) == 0 || a.dim(j, k) == 0) continue;
                const int fi = object_map[i], fj = object_map[j], fk = object_map[k];
                for (int ai = 0; ai < a.dim(i, j); ++ai)
                    for (int bi = 0; bi < a.dim(j, k); ++bi) {
                        ++report.pairs_checked;
                        std::vector<Rat> lhs(fibre.dim(fi, fk));
                        if (a.dim(i, k) > 0) {
                            std::vector<Rat> prod = a.compose(i, j, k, ai, bi);
                            for (int c = 0; c < a.dim(i, k); ++c) {
                                if (prod[c] == 0) continue;
                                const Image& im = image(i, k, c);
                                lhs[im.basis_index] += prod[c] * im.coef;
                            }
                        }
                        std::vector<Rat> rhs(fibre.dim(fi, fk));
                        const Image& ia = image(i, j, ai);
                        const Image& ib = image(j, k, bi);
                        std::vector<Rat> fprod = fibre.compose(fi, fj, fk, ia.basis_index, ib.basis_index);
                        for (int c = 0; c < fibre.dim(fi, fk); ++c) rhs[c] = ia.coef * ib.coef * fprod[c];
                        if (lhs != rhs)
                            report.violations.push_back(
                                "functor law fails on " + a.objects[i] + "->" + a.objects[j] + "->" +
                                a.objects[k] + " : " + a.basis(i, j)[ai].label + " * " +
                                a.basis(j, k)[bi].label);
                    }
            }
    return report;
}

RestrictionFunctor restrict_to_fiber(const Triple& t) {
    FukayaObjects objs{t};
    RestrictionFunctor f;
    f.config = t;
    f.fibre_objects = {"P", "Q", "R", "E", "E'", "E''"};
    f.fibre = fibre_model();
    f.object_map.resize(objs.count());
    for (Chain c : {Chain::P, Chain::Q, Chain::R})
        for (int i = 1; i <= chain_length(t, c); ++i)
            f.object_map[objs.chain_object(c, i)] = static_cast<int>(c);
    for (int k = 1; k <= 3; ++k) f.object_map[objs.e_object(k)] = 2 + k;

    const GradedQuiverAlgebra a = build_directed_algebra(t);
    const int n = a.object_count();
    f.images.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const int d = a.dim(i, j);
            if (d == 0) continue;
            auto& slot = f.images[static_cast<size_t>(i) * n + j];
            slot.resize(d);
            const int fi = f.object_map[i], fj = f.object_map[j];
            for (int idx = 0; idx < d; ++idx) {
                const std::string& label = a.basis(i, j)[idx].label;
                std::string target;
                if (label == "1") {
                    target = "1";
                } else if (label[0] == 'e') {
                    target = "1";
                } else if (label[0] == 'x') {
                    target = std::string("x^") + label[2];
                } else if (label[0] == 'y') {
                    // y^X_{i,k} collapses onto the fibre generator y^X_k.
                    target = label.substr(0, 3) + "_" + std::string(1, label[label.size() - 2]);
                } else {
                    target = label; // a, b, c block maps identically
                }
                const int bi = f.fibre.find_basis(fi, fj, target);
                if (bi < 0) throw InternalError("restrict_to_fiber: missing fibre image for " + label);
                slot[idx] = RestrictionFunctor::Image{Rat(1), bi};
            }
        }
    return f;
}

IntMatrix coxeter_matrix(const IntMatrix& chi) {
    if (!chi.is_square()) throw NotInvertibleError("coxeter_matrix: chi not square");
    IntMatrix inv = chi.inverse_unimodular();
    IntMatrix s = inv * chi.transposed();
    // Serre identity chi(x,y) = chi(y,Sx), i.e. chi = S^T chi^T, re-checked exactly.
    if (chi != s.transposed() * chi.transposed())
        throw InternalError("coxeter_matrix: Serre identity failed");
    return s;
}

} // namespace tpqr
