#include "tpqr/quiver.hpp"

#include "tpqr/errors.hpp"

#include <algorithm>

namespace tpqr {

void Quiver::validate() const {
    for (const Arrow& a : arrows) {
        if (a.src < 0 || a.tgt >= object_count())
            throw GradingError("quiver: arrow endpoint out of range");
        if (a.src >= a.tgt)
            throw GradingError("quiver: arrow '" + a.label + "' is not strictly forward");
    }
}

int path_degree(const Quiver& q, const Path& p) {
    int d = 0;
    for (int a : p) d += q.arrows[a].degree;
    return d;
}

std::string path_label(const Quiver& q, const Path& p) {
    if (p.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[p[i]].label;
    }
    return s;
}

std::vector<Path> path_space(const Quiver& q, int src, int tgt) {
    if (src == tgt) return {Path{}};
    if (src > tgt) return {};
    std::vector<Path> out;
    Path current;
    // Depth-first over arrows in index order keeps the enumeration stable.
    auto walk = [&](auto&& self, int node) -> void {
        if (node == tgt) {
            out.push_back(current);
            return;
        }
        if (node > tgt) return;
        for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai) {
            if (q.arrows[ai].src != node) continue;
            current.push_back(ai);
            self(self, q.arrows[ai].tgt);
            current.pop_back();
        }
    };
    walk(walk, src);
    return out;
}

namespace {

void validate_relation(const Quiver& q, const Relation& rel) {
    if (rel.terms.empty()) throw GradingError("relation: empty combination");
    int src = -1, tgt = -1, degree = 0;
    bool first = true;
    for (const PathTerm& t : rel.terms) {
        if (t.path.empty()) throw GradingError("relation: unit paths are not allowed");
        if (t.coef == 0) throw GradingError("relation: zero coefficient term");
        const int s = q.arrows[t.path.front()].src;
        const int e = q.arrows[t.path.back()].tgt;
        for (size_t i = 0; i + 1 < t.path.size(); ++i)
            if (q.arrows[t.path[i]].tgt != q.arrows[t.path[i + 1]].src)
                throw GradingError("relation: non-composable path");
        const int d = path_degree(q, t.path);
        if (first) {
            src = s;
            tgt = e;
            degree = d;
            first = false;
        } else if (s != src || e != tgt) {
            throw GradingError("relation: terms with distinct endpoints");
        } else if (d != degree) {
            throw GradingError("relation: inhomogeneous degrees");
        }
    }
}

int relation_src(const Quiver& q, const Relation& rel) { return q.arrows[rel.terms[0].path.front()].src; }
int relation_tgt(const Quiver& q, const Relation& rel) { return q.arrows[rel.terms[0].path.back()].tgt; }

} // namespace

QuotientBasis::QuotientBasis(const Quiver& q, const std::vector<Relation>& relations, int src,
                             int tgt)
    : quiver_(&q), src_(src), tgt_(tgt) {
    paths_ = path_space(q, src, tgt);
    for (int i = 0; i < static_cast<int>(paths_.size()); ++i) path_index_[paths_[i]] = i;
    const int n = static_cast<int>(paths_.size());

    auto insert_row = [&](std::vector<Rat> v) {
        // Reduce against existing rows in descending lead order; a
        // subtraction only touches positions below the lead, so one sweep
        // leaves no entry at any existing lead.
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            const int l = it->first;
            if (v[l] == 0) continue;
            Rat factor = v[l];
            const std::vector<Rat>& row = it->second;
            for (int i = 0; i <= l; ++i) v[i] -= factor * row[i];
        }
        int lead = -1;
        for (int i = n - 1; i >= 0; --i)
            if (v[i] != 0) { lead = i; break; }
        if (lead < 0) return;
        Rat inv = 1 / v[lead];
        for (int i = 0; i <= lead; ++i) v[i] *= inv;
        // Back-substitution keeps every stored row clear of all leads.
        for (auto& [l, row] : rows_) {
            if (row[lead] == 0) continue;
            Rat factor = row[lead];
            for (int i = 0; i <= lead; ++i) row[i] -= factor * v[i];
        }
        rows_.emplace(lead, std::move(v));
    };

    for (const Relation& rel : relations) {
        validate_relation(q, rel);
        const int a = relation_src(q, rel);
        const int b = relation_tgt(q, rel);
        const std::vector<Path> prefixes = path_space(q, src, a);
        const std::vector<Path> suffixes = path_space(q, b, tgt);
        for (const Path& u : prefixes)
            for (const Path& v : suffixes) {
                std::vector<Rat> vec(n);
                for (const PathTerm& t : rel.terms) {
                    Path full = u;
                    full.insert(full.end(), t.path.begin(), t.path.end());
                    full.insert(full.end(), v.begin(), v.end());
                    vec[path_index_.at(full)] += t.coef;
                }
                insert_row(std::move(vec));
            }
    }

    basis_pos_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (rows_.count(i)) continue;
        basis_pos_[i] = static_cast<int>(basis_.size());
        basis_.push_back(paths_[i]);
    }
}

std::map<int, int> QuotientBasis::graded_dims() const {
    std::map<int, int> out;
    for (const Path& p : basis_) out[path_degree(*quiver_, p)] += 1;
    return out;
}

std::vector<Rat> QuotientBasis::reduce(const PathExpr& expr) const {
    const int n = static_cast<int>(paths_.size());
    std::vector<Rat> v(n);
    for (const PathTerm& t : expr) {
        auto it = path_index_.find(t.path);
        if (it == path_index_.end()) throw InternalError("reduce: path outside this hom space");
        v[it->second] += t.coef;
    }
    // Rows are fully back-substituted, so one elimination pass per row suffices.
    for (const auto& [lead, row] : rows_) {
        if (v[lead] == 0) continue;
        Rat factor = v[lead];
        for (int i = 0; i <= lead; ++i) v[i] -= factor * row[i];
    }
    std::vector<Rat> out(basis_.size());
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        if (basis_pos_[i] < 0) throw InternalError("reduce: residue on a pivot path");
        out[basis_pos_[i]] = v[i];
    }
    return out;
}

std::map<int, int> GradedQuiverAlgebra::graded_dims(int i, int j) const {
    std::map<int, int> out;
    for (const BasisElement& b : basis(i, j)) out[b.degree] += 1;
    return out;
}

long GradedQuiverAlgebra::total_dimension() const {
    long total = 0;
    for (const auto& b : hom) total += static_cast<long>(b.size());
    return total;
}

std::vector<Rat> GradedQuiverAlgebra::compose(int i, int j, int k, int a, int b) const {
    std::vector<Rat> out(dim(i, k));
    auto it = products.find({i, j, k});
    if (it == products.end()) return out;
    const auto& table = it->second;
    return table[a][b];
}

Rat& GradedQuiverAlgebra::product_coefficient(int i, int j, int k, int a, int b, int c) {
    auto& table = products[{i, j, k}];
    if (table.empty())
        table.assign(dim(i, j), std::vector<std::vector<Rat>>(
                                    dim(j, k), std::vector<Rat>(dim(i, k))));
    return table[a][b][c];
}

int GradedQuiverAlgebra::find_basis(int i, int j, const std::string& label) const {
    const auto& b = basis(i, j);
    for (int a = 0; a < static_cast<int>(b.size()); ++a)
        if (b[a].label == label) return a;
    return -1;
}

bool GradedQuiverAlgebra::all_constants_integral() const {
    for (const auto& [key, table] : products)
        for (const auto& row : table)
            for (const auto& cell : row)
                for (const Rat& c : cell)
                    if (!is_integer(c)) return false;
    return true;
}

namespace {

GradedQuiverAlgebra build_impl(const Quiver& q, const std::vector<Relation>& relations,
                               const std::map<std::pair<int, int>, NamedBasisSpec>* named) {
    q.validate();
    const int n = q.object_count();
    GradedQuiverAlgebra alg;
    alg.objects = q.objects;
    alg.hom.resize(static_cast<size_t>(n) * n);

    std::vector<QuotientBasis> quotients;
    std::vector<int> quotient_of(static_cast<size_t>(n) * n, -1);
    // Basis representatives as path combinations, per pair.
    std::vector<std::vector<PathExpr>> reps(static_cast<size_t>(n) * n);
    // Conversion from machine (quotient) coordinates to exported coordinates.
    std::vector<RatMatrix> to_named(static_cast<size_t>(n) * n);

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            QuotientBasis qb(q, relations, i, j);
            if (qb.dimension() == 0) continue;
            const int slot = i * n + j;
            quotient_of[slot] = static_cast<int>(quotients.size());

            if (named != nullptr) {
                auto it = named->find({i, j});
                if (it == named->end()) {
                    if (qb.dimension() != 0 && !(i == j && qb.dimension() == 1))
                        throw GradingError("build_algebra: missing named basis for a nonzero hom space");
                    // Diagonal defaults to the unit.
                    alg.hom[slot].push_back(BasisElement{"1", 0});
                    reps[slot].push_back(PathExpr{{Rat(1), Path{}}});
                } else {
                    const NamedBasisSpec& spec = it->second;
                    if (static_cast<int>(spec.elements.size()) != qb.dimension())
                        throw GradingError("build_algebra: named basis size differs from quotient dimension for hom(" +
                                           q.objects[i] + "," + q.objects[j] + ")");
                    alg.hom[slot] = spec.elements;
                    reps[slot] = spec.reps;
                }
                // Invertible change of basis named -> machine.
                const int d = qb.dimension();
                RatMatrix m(d, d);
                for (int col = 0; col < d; ++col) {
                    std::vector<Rat> coords = qb.reduce(reps[slot][col]);
                    for (int row = 0; row < d; ++row) m.at(row, col) = coords[row];
                }
                try {
                    to_named[slot] = m.solve(RatMatrix(IntMatrix::identity(d)));
                } catch (const NotInvertibleError&) {
                    throw GradingError("build_algebra: named representatives are not a basis for hom(" +
                                       q.objects[i] + "," + q.objects[j] + ")");
                }
            } else {
                for (const Path& p : qb.basis_paths()) {
                    alg.hom[slot].push_back(BasisElement{path_label(q, p), path_degree(q, p)});
                    reps[slot].push_back(PathExpr{{Rat(1), p}});
                }
                to_named[slot] = RatMatrix(IntMatrix::identity(qb.dimension()));
            }
            quotients.push_back(std::move(qb));
        }

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (alg.dim(i, j) == 0) continue;
            for (int k = j; k < n; ++k) {
                if (alg.dim(j, k) == 0 || alg.dim(i, k) == 0) continue;
                const int slot_ik = i * n + k;
                const QuotientBasis& target = quotients[quotient_of[slot_ik]];
                const RatMatrix& conv = to_named[slot_ik];
                for (int a = 0; a < alg.dim(i, j); ++a)
                    for (int b = 0; b < alg.dim(j, k); ++b) {
                        PathExpr prod;
                        for (const PathTerm& ta : reps[i * n + j][a])
                            for (const PathTerm& tb : reps[j * n + k][b]) {
                                Path pp = ta.path;
                                pp.insert(pp.end(), tb.path.begin(), tb.path.end());
                                prod.push_back(PathTerm{ta.coef * tb.coef, std::move(pp)});
                            }
                        std::vector<Rat> machine = target.reduce(prod);
                        for (int c = 0; c < alg.dim(i, k); ++c) {
                            Rat val;
                            for (int m = 0; m < alg.dim(i, k); ++m)
                                val += conv.at(c, m) * machine[m];
                            if (val != 0) alg.product_coefficient(i, j, k, a, b, c) = val;
                        }
                    }
            }
        }
    return alg;
}

} // namespace

GradedQuiverAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& relations) {
    return build_impl(q, relations, nullptr);
}

GradedQuiverAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& relations,
                                  const std::map<std::pair<int, int>, NamedBasisSpec>& named) {
    return build_impl(q, relations, &named);
}

void fill_unit_products(GradedQuiverAlgebra& alg) {
    const int n = alg.object_count();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const int d = alg.dim(i, j);
            if (d == 0 || alg.dim(i, i) == 0 || alg.dim(j, j) == 0) continue;
            for (int a = 0; a < d; ++a) {
                alg.product_coefficient(i, i, j, 0, a, a) = 1;
                alg.product_coefficient(i, j, j, a, 0, a) = 1;
            }
        }
}

AlgebraCheckReport verify_associativity(const GradedQuiverAlgebra& alg) {
    AlgebraCheckReport report;
    const int n = alg.object_count();

    auto describe = [&alg](int i, int j, int a) {
        return alg.objects[i] + "->" + alg.objects[j] + ":" + alg.basis(i, j)[a].label;
    };

    // Unit laws and degree additivity.
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const int dij = alg.dim(i, j);
            if (dij == 0) continue;
            for (int a = 0; a < dij; ++a) {
                if (i != j || alg.dim(i, i) > 0) {
                    std::vector<Rat> left = alg.compose(i, i, j, 0, a);
                    std::vector<Rat> right = alg.compose(i, j, j, a, 0);
                    for (int c = 0; c < dij; ++c) {
                        const Rat expect = (c == a) ? Rat(1) : Rat(0);
                        if (left[c] != expect)
                            report.violations.push_back("left unit fails on " + describe(i, j, a));
                        if (right[c] != expect)
                            report.violations.push_back("right unit fails on " + describe(i, j, a));
                    }
                    report.unit_checks += 2;
                }
            }
        }

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                if (alg.dim(i, j) == 0 || alg.dim(j, k) == 0 || alg.dim(i, k) == 0) continue;
                for (int a = 0; a < alg.dim(i, j); ++a)
                    for (int b = 0; b < alg.dim(j, k); ++b) {
                        std::vector<Rat> coeffs = alg.compose(i, j, k, a, b);
                        const int da = alg.basis(i, j)[a].degree;
                        const int db = alg.basis(j, k)[b].degree;
                        for (int c = 0; c < alg.dim(i, k); ++c) {
                            if (coeffs[c] == 0) continue;
                            ++report.degree_checks;
                            if (alg.basis(i, k)[c].degree != da + db)
                                report.violations.push_back("degree additivity fails on " +
                                                            describe(i, j, a) + " * " +
                                                            describe(j, k, b));
                        }
                    }
            }

    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k)
                for (int l = k; l < n; ++l) {
                    if (alg.dim(i, j) == 0 || alg.dim(j, k) == 0 || alg.dim(k, l) == 0 ||
                        alg.dim(i, l) == 0)
                        continue;
                    for (int a = 0; a < alg.dim(i, j); ++a)
                        for (int b = 0; b < alg.dim(j, k); ++b)
                            for (int c = 0; c < alg.dim(k, l); ++c) {
                                ++report.associativity_checks;
                                std::vector<Rat> lhs(alg.dim(i, l));
                                if (alg.dim(i, k) > 0) {
                                    std::vector<Rat> ab = alg.compose(i, j, k, a, b);
                                    for (int m = 0; m < alg.dim(i, k); ++m) {
                                        if (ab[m] == 0) continue;
                                        std::vector<Rat> mc = alg.compose(i, k, l, m, c);
                                        for (int x = 0; x < alg.dim(i, l); ++x)
                                            lhs[x] += ab[m] * mc[x];
                                    }
                                }
                                std::vector<Rat> rhs(alg.dim(i, l));
                                if (alg.dim(j, l) > 0) {
                                    std::vector<Rat> bc = alg.compose(j, k, l, b, c);
                                    for (int m = 0; m < alg.dim(j, l); ++m) {
                                        if (bc[m] == 0) continue;
                                        std::vector<Rat> am = alg.compose(i, j, l, a, m);
                                        for (int x = 0; x < alg.dim(i, l); ++x)
                                            rhs[x] += bc[m] * am[x];
                                    }
                                }
                                if (lhs != rhs)
                                    report.violations.push_back(
                                        "associativity fails on (" + describe(i, j, a) + ", " +
                                        describe(j, k, b) + ", " + describe(k, l, c) + ")");
                            }
                }
    return report;
}

IntMatrix euler_matrix(const GradedQuiverAlgebra& alg) {
    const int n = alg.object_count();
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int sum = 0;
            for (const BasisElement& b : alg.basis(i, j))
                sum += (b.degree % 2 == 0) ? 1 : -1;
            m.at(i, j) = sum;
        }
    return m;
}

} // namespace tpqr
