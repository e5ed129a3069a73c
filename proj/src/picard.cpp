#include "tpqr/picard.hpp"

#include "tpqr/errors.hpp"

namespace tpqr {

int chain_length(const Triple& t, Chain c) {
    switch (c) {
    case Chain::P: return t.p;
    case Chain::Q: return t.q;
    default: return t.r;
    }
}

int DivisorClass::f_index(Chain c, int i) const {
    const int len = chain_length(cfg_, c);
    if (i < 1 || i > len) throw InternalError("DivisorClass: chain index out of range");
    int base = 1;
    if (c == Chain::Q) base += cfg_.p;
    if (c == Chain::R) base += cfg_.p + cfg_.q;
    return base + (i - 1);
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (cfg_ != o.cfg_) throw ConfigMismatchError("divisor sum: distinct configurations");
    DivisorClass out(cfg_);
    for (int i = 0; i < dim(); ++i) out.coeff_[i] = coeff_[i] + o.coeff_[i];
    return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    if (cfg_ != o.cfg_) throw ConfigMismatchError("divisor difference: distinct configurations");
    DivisorClass out(cfg_);
    for (int i = 0; i < dim(); ++i) out.coeff_[i] = coeff_[i] - o.coeff_[i];
    return out;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass out(cfg_);
    for (int i = 0; i < dim(); ++i) out.coeff_[i] = -coeff_[i];
    return out;
}

DivisorClass DivisorClass::scaled(const Int& k) const {
    DivisorClass out(cfg_);
    for (int i = 0; i < dim(); ++i) out.coeff_[i] = k * coeff_[i];
    return out;
}

Int intersection(const DivisorClass& a, const DivisorClass& b) {
    if (a.config() != b.config())
        throw ConfigMismatchError("intersection: classes live on distinct configurations");
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    Int out = x[0] * y[0];
    for (size_t i = 1; i < x.size(); ++i) out -= x[i] * y[i];
    return out;
}

IntMatrix intersection_gram(const Triple& t) {
    const int n = t.pic_rank();
    IntMatrix g(n, n);
    g.at(0, 0) = 1;
    for (int i = 1; i < n; ++i) g.at(i, i) = -1;
    return g;
}

DivisorClass ell_class(const Triple& t) {
    DivisorClass d(t);
    d.ell() = 1;
    return d;
}

DivisorClass f_class(const Triple& t, Chain c, int i) {
    DivisorClass d(t);
    d.f(c, i) = 1;
    return d;
}

DivisorClass strict_transform_class(const Triple& t, Chain c, int i) {
    if (i < 2 || i > chain_length(t, c))
        throw InternalError("strict_transform_class: index must be in 2..chain length");
    return f_class(t, c, i) - f_class(t, c, i - 1);
}

DivisorClass last_exceptional_class(const Triple& t, Chain c) { return f_class(t, c, 1); }

DivisorClass htilde_class(const Triple& t) {
    DivisorClass d = ell_class(t);
    d.f(Chain::P, t.p) = -1;
    d.f(Chain::Q, t.q) = -1;
    d.f(Chain::R, t.r) = -1;
    return d;
}

DivisorClass boundary_component_class(const Triple& t, int i) {
    if (i < 1 || i > 3) throw InternalError("boundary_component_class: component index must be 1..3");
    const Chain c = static_cast<Chain>(i - 1);
    DivisorClass d = ell_class(t);
    for (int j = 1; j <= chain_length(t, c); ++j) d.f(c, j) = -1;
    return d;
}

DivisorClass anticanonical_cycle_class(const Triple& t) {
    return boundary_component_class(t, 1) + boundary_component_class(t, 2) +
           boundary_component_class(t, 3);
}

DivisorClass canonical_class(const Triple& t) {
    DivisorClass d(t);
    d.ell() = -3;
    for (Chain c : {Chain::P, Chain::Q, Chain::R})
        for (int i = 1; i <= chain_length(t, c); ++i) d.f(c, i) = 1;
    return d;
}

std::vector<NamedClass> named_classes(const Triple& t) {
    std::vector<NamedClass> out;
    auto add = [&out](std::string name, DivisorClass d) {
        Int self = intersection(d, d);
        out.push_back(NamedClass{std::move(name), std::move(d), std::move(self)});
    };
    add("H~", htilde_class(t));
    for (Chain c : {Chain::P, Chain::Q, Chain::R}) {
        add(std::string("E_{") + chain_name(c) + ",1}", last_exceptional_class(t, c));
        for (int i = 2; i <= chain_length(t, c); ++i)
            add(std::string("E~_{") + chain_name(c) + "," + std::to_string(i) + "}",
                strict_transform_class(t, c, i));
    }
    add("D_1", boundary_component_class(t, 1));
    add("D_2", boundary_component_class(t, 2));
    add("D_3", boundary_component_class(t, 3));
    add("D", anticanonical_cycle_class(t));
    add("K", canonical_class(t));
    return out;
}

std::vector<ObjectId> exceptional_order(const Triple& t) {
    std::vector<ObjectId> out;
    for (Chain c : {Chain::P, Chain::Q, Chain::R})
        for (int i = 1; i <= chain_length(t, c); ++i) out.push_back(ObjectId::chain_sheaf(c, i));
    for (int s = 0; s <= 2; ++s) out.push_back(ObjectId::line_bundle(s));
    return out;
}

std::string object_label(const ObjectId& id) {
    if (id.kind == ObjectId::Kind::ChainSheaf)
        return std::string("D_{") + chain_name(id.chain) + "," + std::to_string(id.index) + "}";
    return "O(" + std::to_string(id.index) + ")";
}

ChernCharacter ChernCharacter::operator+(const ChernCharacter& o) const {
    return {rank + o.rank, c1 + o.c1, ch2_doubled + o.ch2_doubled};
}

ChernCharacter ChernCharacter::operator-(const ChernCharacter& o) const {
    return {rank - o.rank, c1 - o.c1, ch2_doubled - o.ch2_doubled};
}

ChernCharacter ChernCharacter::scaled(const Int& k) const {
    return {k * rank, c1.scaled(k), k * ch2_doubled};
}

ChernCharacter ChernCharacter::twisted_by(const DivisorClass& L) const {
    ChernCharacter out;
    out.rank = rank;
    out.c1 = c1 + L.scaled(rank);
    out.ch2_doubled = ch2_doubled + 2 * intersection(c1, L) + rank * intersection(L, L);
    return out;
}

Int euler_pairing(const ChernCharacter& e, const ChernCharacter& f) {
    if (e.c1.config() != f.c1.config())
        throw ConfigMismatchError("euler_pairing: classes live on distinct configurations");
    const DivisorClass k = canonical_class(e.c1.config());
    // 2 chi = 2 r1 r2 + r1 t2 + r2 t1 - 2 c1.c2 - K.(r1 c2 - r2 c1)
    Int twice = 2 * e.rank * f.rank + e.rank * f.ch2_doubled + f.rank * e.ch2_doubled -
                2 * intersection(e.c1, f.c1) -
                intersection(k, f.c1.scaled(e.rank) - e.c1.scaled(f.rank));
    if (twice % 2 != 0)
        throw InternalError("euler_pairing: half-integral value; ch2 parity inconsistent with c1");
    return twice / 2;
}

namespace {

// The chain sheaves are two-term line-bundle complexes supported on
// exceptional curves; on K_0 this leaves one sign and one ch_2 value to fix.
// Both are pinned by requiring chi(D_{X,j}, O) = 1 and chi(O, D_{X,j}) = 0,
// which gives K.c1 = 1 and doubled ch_2 = 1, i.e. c1 = -f^X_j.
ChernCharacter chain_sheaf_character(const Triple& t, Chain c, int j) {
    ChernCharacter ch;
    ch.rank = 0;
    ch.c1 = -f_class(t, c, j);
    ch.ch2_doubled = 1;
    if (intersection(canonical_class(t), ch.c1) != 1)
        throw InternalError("chain_sheaf_character: normalisation anchor K.c1 = 1 failed");
    return ch;
}

} // namespace

ChernCharacter chern_character(const ObjectId& id, const Triple& t) {
    if (id.kind == ObjectId::Kind::LineBundle) {
        const int s = id.index;
        ChernCharacter ch;
        ch.rank = 1;
        ch.c1 = ell_class(t).scaled(s);
        ch.ch2_doubled = Int(s) * s;
        return ch;
    }
    return chain_sheaf_character(t, id.chain, id.index);
}

ChernCharacter curve_sheaf_character(const DivisorClass& curve, const Int& degree) {
    ChernCharacter ch;
    ch.rank = 0;
    ch.c1 = curve;
    ch.ch2_doubled = 2 * degree - intersection(curve, curve);
    return ch;
}

ChernCharacter point_character(const Triple& t) {
    ChernCharacter ch;
    ch.rank = 0;
    ch.c1 = DivisorClass(t);
    ch.ch2_doubled = 2;
    return ch;
}

namespace {

// Coordinates of a Chern character in the ambient K-lattice basis
// (rank; l-coefficient, f-coefficients; doubled ch_2).
std::vector<Rat> k_coordinates(const ChernCharacter& ch) {
    std::vector<Rat> v;
    v.emplace_back(ch.rank);
    for (const Int& c : ch.c1.coefficients()) v.emplace_back(c);
    v.emplace_back(ch.ch2_doubled);
    return v;
}

} // namespace

IntMatrix twist_matrix(const DivisorClass& L, const Triple& t) {
    if (L.config() != t) throw ConfigMismatchError("twist_matrix: class has distinct configuration");
    const std::vector<ObjectId> objs = exceptional_order(t);
    const int n = static_cast<int>(objs.size());
    if (n != t.pic_rank() + 2) throw InternalError("twist_matrix: K-lattice dimension mismatch");
    RatMatrix basis(n, n), twisted(n, n);
    for (int j = 0; j < n; ++j) {
        ChernCharacter ch = chern_character(objs[j], t);
        std::vector<Rat> col = k_coordinates(ch);
        std::vector<Rat> tcol = k_coordinates(ch.twisted_by(L));
        for (int i = 0; i < n; ++i) {
            basis.at(i, j) = col[i];
            twisted.at(i, j) = tcol[i];
        }
    }
    RatMatrix sol;
    try {
        sol = basis.solve(twisted);
    } catch (const NotInvertibleError&) {
        throw InternalError("twist_matrix: exceptional K-classes degenerate");
    }
    return sol.to_int_matrix();
}

IntMatrix euler_pairing_matrix(const Triple& t) {
    const std::vector<ObjectId> objs = exceptional_order(t);
    const int n = static_cast<int>(objs.size());
    std::vector<ChernCharacter> ch;
    ch.reserve(n);
    for (const ObjectId& id : objs) ch.push_back(chern_character(id, t));
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = euler_pairing(ch[i], ch[j]);
    return m;
}

} // namespace tpqr
