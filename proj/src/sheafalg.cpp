#include "tpqr/sheafalg.hpp"

#include "tpqr/errors.hpp"
#include "tpqr/monomials.hpp"

namespace tpqr {

namespace {

std::string pair_subscript(int i, int j) {
    return "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

} // namespace

GradedQuiverAlgebra build_sheaf_algebra(const Triple& t) {
    if (t.p < 1 || t.q < 1 || t.r < 1)
        throw ConfigMismatchError("build_sheaf_algebra: p,q,r must be >= 1");
    FukayaObjects objs{t}; // same ordered object layout as the exceptional sequence
    const int n = objs.count();

    GradedQuiverAlgebra alg;
    for (const ObjectId& id : exceptional_order(t)) alg.objects.push_back(object_label(id));
    alg.hom.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) alg.basis_mut(i, i).push_back({"1", 0});

    for (Chain c : {Chain::P, Chain::Q, Chain::R}) {
        const int len = chain_length(t, c);
        for (int i = 1; i <= len; ++i) {
            for (int j = i + 1; j <= len; ++j) {
                auto& b = alg.basis_mut(objs.chain_object(c, i), objs.chain_object(c, j));
                b.push_back({std::string("eh^") + chain_name(c) + pair_subscript(i, j), 0});
                b.push_back({std::string("xh^") + chain_name(c) + pair_subscript(i, j), 1});
            }
            for (int s = 0; s <= 2; ++s)
                alg.basis_mut(objs.chain_object(c, i), objs.e_object(s + 1))
                    .push_back({std::string("yh^") + chain_name(c) + pair_subscript(i, s), 0});
        }
    }
    for (int m = 0; m < 3; ++m) {
        alg.basis_mut(objs.e_object(1), objs.e_object(2)).push_back({monomials::degree_one[m], 0});
        alg.basis_mut(objs.e_object(2), objs.e_object(3)).push_back({monomials::degree_one[m], 0});
    }
    for (int m = 0; m < 6; ++m)
        alg.basis_mut(objs.e_object(1), objs.e_object(3)).push_back({monomials::degree_two[m], 0});

    fill_unit_products(alg);

    for (Chain c : {Chain::P, Chain::Q, Chain::R}) {
        const int len = chain_length(t, c);
        const int kill = monomials::killing_variable(c);
        // Truncated chain block: e composes as a unit-like element, x is
        // annihilated by everything except the e's.
        for (int i = 1; i <= len; ++i)
            for (int j = i + 1; j <= len; ++j) {
                const int oi = objs.chain_object(c, i), oj = objs.chain_object(c, j);
                for (int k = j + 1; k <= len; ++k) {
                    const int ok = objs.chain_object(c, k);
                    alg.product_coefficient(oi, oj, ok, 0, 0, 0) = 1; // eh.eh = eh
                    alg.product_coefficient(oi, oj, ok, 0, 1, 1) = 1; // eh.xh = xh
                    alg.product_coefficient(oi, oj, ok, 1, 0, 1) = 1; // xh.eh = xh
                }
                for (int s = 0; s <= 2; ++s)
                    alg.product_coefficient(oi, oj, objs.e_object(s + 1), 0, 0, 0) = 1; // eh.yh = yh
            }
        for (int i = 1; i <= len; ++i) {
            const int oi = objs.chain_object(c, i);
            for (int m = 1; m <= 3; ++m) {
                if (m == kill) continue;
                alg.product_coefficient(oi, objs.e_object(1), objs.e_object(2), 0, m - 1, 0) = 1;
                alg.product_coefficient(oi, objs.e_object(2), objs.e_object(3), 0, m - 1, 0) = 1;
            }
            for (int idx = 0; idx < 6; ++idx)
                if (!monomials::degree_two_divisible_by(idx, kill))
                    alg.product_coefficient(oi, objs.e_object(1), objs.e_object(3), 0, idx, 0) = 1;
        }
    }
    for (int m1 = 1; m1 <= 3; ++m1)
        for (int m2 = 1; m2 <= 3; ++m2)
            alg.product_coefficient(objs.e_object(1), objs.e_object(2), objs.e_object(3), m1 - 1,
                                    m2 - 1, monomials::product_index(m1, m2)) = 1;
    return alg;
}

std::string target_description(const RestrictionTarget& t) {
    if (t.kind == RestrictionTarget::Kind::SkyscraperResolution)
        return "{O_D(-s_" + std::to_string(t.point) + ") -> O_D}";
    return "line bundle of multidegree (" + std::to_string(t.multidegree[0]) + "," +
           std::to_string(t.multidegree[1]) + "," + std::to_string(t.multidegree[2]) +
           "), parameter " + t.gluing_parameter.get_str();
}

RestrictionTarget skyscraper_target(int point) {
    RestrictionTarget target;
    target.kind = RestrictionTarget::Kind::SkyscraperResolution;
    target.point = point;
    return target;
}

RestrictionTarget line_bundle_target(int s) {
    RestrictionTarget target;
    target.kind = RestrictionTarget::Kind::LineBundle;
    target.multidegree = {s, s, s};
    target.gluing_parameter = Rat(1);
    return target;
}

RestrictionImages restriction_images(const Triple& t) {
    RestrictionImages out;
    out.config = t;
    for (const ObjectId& id : exceptional_order(t)) {
        if (id.kind == ObjectId::Kind::ChainSheaf) {
            // The P-chain sits over the component D_1, the Q-chain over D_2,
            // the R-chain over D_3; restriction lands on the skyscraper at
            // the marked smooth point of that component.
            out.entries.emplace_back(object_label(id),
                                     skyscraper_target(static_cast<int>(id.chain) + 1));
        } else {
            out.entries.emplace_back(object_label(id), line_bundle_target(id.index));
        }
    }
    return out;
}

FiberSheafDims fiber_sheaf_dims() {
    FiberSheafDims out;
    out.objects = {"O_{s_1}", "O_{s_2}", "O_{s_3}", "O_D"};
    for (int i = 0; i < 3; ++i) {
        out.dims[{i, i}] = {{0, 1}, {1, 1}};  // endomorphisms of a skyscraper
        out.dims[{i, 3}] = {{1, 1}};          // hom(skyscraper, O_D)
        out.dims[{3, i}] = {{0, 1}};          // hom(O_D, skyscraper)
    }
    out.dims[{3, 3}] = {{0, 1}, {1, 1}};      // H^*(O_D): arithmetic genus one
    return out;
}

} // namespace tpqr
