#include "tpqr/report.hpp"

#include "tpqr/errors.hpp"

namespace tpqr::report {

namespace {

const Int kJsonMax("9007199254740991"); // 2^53 - 1

Json triple_config(const Triple& t) {
    Json c;
    c["p"] = t.p;
    c["q"] = t.q;
    c["r"] = t.r;
    return c;
}

Json json_dim_map(const std::map<int, int>& dims) {
    Json out = Json::object();
    for (const auto& [deg, dim] : dims) out[std::to_string(deg)] = dim;
    return out;
}

Json json_check(const std::string& name, bool passed, Json details) {
    Json c;
    c["name"] = name;
    c["status"] = passed ? "pass" : "fail";
    c["details"] = std::move(details);
    return c;
}

Json json_string_list(const std::vector<std::string>& items) {
    Json out = Json::array();
    for (const auto& s : items) out.push_back(s);
    return out;
}

Json json_cycle(const CycleSeq& c) {
    Json out = Json::array();
    for (long b : c.entries()) out.push_back(b);
    return out;
}

} // namespace

Json json_int(const Int& v) {
    if (v <= kJsonMax && v >= -kJsonMax) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Json json_rat(const Rat& v) {
    if (is_integer(v)) return json_int(v.get_num());
    return v.get_str();
}

Json json_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_chern(const ChernCharacter& ch) {
    Json out;
    out["rank"] = json_int(ch.rank);
    Json c1 = Json::array();
    for (const Int& c : ch.c1.coefficients()) c1.push_back(json_int(c));
    out["c1"] = std::move(c1);
    out["ch2_doubled"] = json_int(ch.ch2_doubled);
    return out;
}

Json envelope(const std::string& command, Json config, Json result) {
    Json out;
    out["schema"] = kSchema;
    out["tool"] = Json{{"name", "tpqr"}, {"version", kToolVersion}};
    out["command"] = command;
    out["config"] = std::move(config);
    out["result"] = std::move(result);
    return out;
}

namespace {

Json algebra_json(const GradedQuiverAlgebra& alg) {
    Json out;
    out["objects"] = json_string_list(alg.objects);
    const int n = alg.object_count();
    Json hom = Json::array();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (alg.dim(i, j) == 0) continue;
            Json entry;
            entry["src"] = alg.objects[i];
            entry["tgt"] = alg.objects[j];
            Json basis = Json::array();
            for (const BasisElement& b : alg.basis(i, j))
                basis.push_back(Json{{"label", b.label}, {"degree", b.degree}});
            entry["basis"] = std::move(basis);
            hom.push_back(std::move(entry));
        }
    out["hom"] = std::move(hom);
    out["total_dimension"] = static_cast<std::int64_t>(alg.total_dimension());

    Json constants = Json::array();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = j; k < n; ++k) {
                if (alg.dim(i, j) == 0 || alg.dim(j, k) == 0 || alg.dim(i, k) == 0) continue;
                for (int a = 0; a < alg.dim(i, j); ++a)
                    for (int b = 0; b < alg.dim(j, k); ++b) {
                        std::vector<Rat> prod = alg.compose(i, j, k, a, b);
                        Json terms = Json::array();
                        for (int c = 0; c < alg.dim(i, k); ++c) {
                            if (prod[c] == 0) continue;
                            terms.push_back(Json{{"coef", json_rat(prod[c])},
                                                 {"label", alg.basis(i, k)[c].label}});
                        }
                        if (terms.empty()) continue;
                        Json entry;
                        entry["src"] = alg.objects[i];
                        entry["via"] = alg.objects[j];
                        entry["tgt"] = alg.objects[k];
                        entry["left"] = alg.basis(i, j)[a].label;
                        entry["right"] = alg.basis(j, k)[b].label;
                        entry["result"] = std::move(terms);
                        constants.push_back(std::move(entry));
                    }
            }
    out["structure_constants"] = std::move(constants);
    return out;
}

} // namespace

Json build_report(const Triple& t, const std::string& side) {
    GradedQuiverAlgebra alg = (side == "sheaf") ? build_sheaf_algebra(t) : build_directed_algebra(t);
    Json config = triple_config(t);
    config["side"] = side;
    return envelope("build", std::move(config), algebra_json(alg));
}

CheckOutcome check_report(const Triple& t, const std::string& suite) {
    const bool all = suite == "all";
    Json checks = Json::array();
    bool passed = true;
    auto push = [&checks, &passed](Json check) {
        passed = passed && check["status"] == "pass";
        checks.push_back(std::move(check));
    };

    if (all || suite == "dims") {
        const DimTable expected = expected_dim_table(t);
        const bool fukaya_ok = algebra_dim_table(build_directed_algebra(t)) == expected;
        const bool sheaf_ok = algebra_dim_table(build_sheaf_algebra(t)) == expected;
        Json details;
        details["fukaya_matches"] = fukaya_ok;
        details["sheaf_matches"] = sheaf_ok;
        details["total_dimension"] = static_cast<std::int64_t>(expected_total_dimension(t));
        push(json_check("dims", fukaya_ok && sheaf_ok, std::move(details)));
    }
    if (all || suite == "assoc") {
        const AlgebraCheckReport fuk = verify_associativity(build_directed_algebra(t));
        const AlgebraCheckReport coh = verify_associativity(build_sheaf_algebra(t));
        Json details;
        details["fukaya_triples_checked"] = static_cast<std::int64_t>(fuk.associativity_checks);
        details["sheaf_triples_checked"] = static_cast<std::int64_t>(coh.associativity_checks);
        details["violations"] = json_string_list(fuk.violations.empty() ? coh.violations : fuk.violations);
        push(json_check("assoc", fuk.passed() && coh.passed(), std::move(details)));
    }
    if (all || suite == "iso") {
        const AlgebraIsoReport iso = check_phi_A(t);
        Json details;
        details["pairs_checked"] = static_cast<std::int64_t>(iso.pairs_checked);
        details["constants_checked"] = static_cast<std::int64_t>(iso.constants_checked);
        details["dim_mismatches"] = json_string_list(iso.dim_mismatches);
        details["basis_mismatches"] = json_string_list(iso.basis_mismatches);
        details["constant_mismatches"] = json_string_list(iso.constant_mismatches);
        push(json_check("iso", iso.clean(), std::move(details)));
    }
    if (all || suite == "euler") {
        const EulerCrosscheck cross = euler_crosscheck(t);
        Json details;
        details["equal"] = cross.equal;
        details["quiver_side"] = json_matrix(cross.quiver_side);
        if (!cross.equal) details["riemann_roch_side"] = json_matrix(cross.riemann_roch_side);
        push(json_check("euler", cross.equal, std::move(details)));
    }
    if (all || suite == "serre") {
        const SerreTwistReport serre = serre_vs_twist(t);
        Json details;
        details["equal"] = serre.equal;
        details["preserves_pairing"] = serre.preserves_pairing;
        details["matrix"] = json_matrix(serre.from_euler);
        if (!serre.equal) details["twist_matrix"] = json_matrix(serre.from_twist);
        push(json_check("serre", serre.equal && serre.preserves_pairing, std::move(details)));
    }
    if (all || suite == "square") {
        const SquareReport square = check_restriction_square(t);
        Json details = Json::array();
        for (const SquareCheck& c : square.checks)
            details.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"details", c.details}});
        push(json_check("square", square.passed(), std::move(details)));
    }

    Json result;
    result["suite"] = suite;
    result["checks"] = std::move(checks);
    result["all_passed"] = passed;
    Json config = triple_config(t);
    config["suite"] = suite;
    return CheckOutcome{envelope("check", std::move(config), std::move(result)), passed};
}

Json mutate_report(const Triple& t, const std::vector<int>& word) {
    ExceptionalCollectionState state =
        initial_collection(euler_matrix(build_directed_algebra(t)));
    for (int w : word)
        state = mutate(state, w > 0 ? w : -w,
                       w > 0 ? MutationDirection::Left : MutationDirection::Right);
    Json result;
    Json classes = Json::array();
    for (const auto& cls : state.classes) {
        Json row = Json::array();
        for (const Int& v : cls) row.push_back(json_int(v));
        classes.push_back(std::move(row));
    }
    result["classes"] = std::move(classes);
    const IntMatrix euler = state.euler();
    result["euler"] = json_matrix(euler);
    result["unitriangular"] = euler.is_upper_unitriangular();
    Json config = triple_config(t);
    Json word_json = Json::array();
    for (int w : word) word_json.push_back(w);
    config["word"] = std::move(word_json);
    return envelope("mutate", std::move(config), std::move(result));
}

Json k0_report(const Triple& t) {
    const LocalizationResult loc = k0_localization(t);
    Json result;
    result["i_minus_s"] = json_matrix(loc.i_minus_s);
    result["free_rank"] = loc.free_rank;
    Json torsion = Json::array();
    for (const Int& v : loc.torsion) torsion.push_back(json_int(v));
    result["torsion"] = std::move(torsion);
    result["pipelines_agree"] = loc.pipelines_agree;
    return envelope("k0", triple_config(t), std::move(result));
}

Json dual_report(const std::vector<long>& entries) {
    const CycleSeq cycle(entries);
    const CycleSeq dual = dual_cycle(cycle);
    Json result;
    result["cycle"] = json_cycle(cycle);
    result["dual"] = json_cycle(dual);
    result["charge"] = charge(cycle);
    result["dual_charge"] = charge(dual);
    long excess = 0;
    for (long b : cycle.entries()) excess += b - 3;
    Json identity;
    identity["length_difference"] = dual.length() - cycle.length();
    identity["entry_excess"] = excess;
    identity["holds"] = (dual.length() - cycle.length()) == excess;
    result["length_identity"] = std::move(identity);
    Json config;
    config["cycle"] = json_cycle(cycle);
    return envelope("dual", std::move(config), std::move(result));
}

Json triangle_report(const Triple& t) {
    const CycleSeq cycle = triangle_cycle(t.p, t.q, t.r);
    Json result;
    result["cycle"] = json_cycle(cycle);
    result["charge"] = charge(cycle);
    return envelope("triangle", triple_config(t), std::move(result));
}

Json classes_report(const Triple& t) {
    Json result;
    Json named = Json::array();
    for (const NamedClass& nc : named_classes(t)) {
        Json entry;
        entry["name"] = nc.name;
        Json coeffs = Json::array();
        for (const Int& c : nc.divisor.coefficients()) coeffs.push_back(json_int(c));
        entry["coefficients"] = std::move(coeffs);
        entry["self_intersection"] = json_int(nc.self_intersection);
        named.push_back(std::move(entry));
    }
    result["named_classes"] = std::move(named);

    const VanishingCycleLedger ledger = vanishing_cycle_classes(t);
    Json cycles = Json::array();
    for (const VanishingCycleEntry& e : ledger.entries) {
        Json entry;
        entry["cycle"] = e.cycle_label;
        entry["curve"] = e.curve_label;
        entry["cone_class"] = json_chern(e.cone_class);
        entry["structure_sheaf"] = json_chern(e.structure_sheaf);
        entry["twisted_sheaf"] = json_chern(e.twisted_sheaf);
        entry["matches_minus_twisted"] = e.matches_minus_twisted;
        entry["cone_self_pairing"] = json_int(e.cone_self_pairing);
        entry["sheaf_self_pairing"] = json_int(e.sheaf_self_pairing);
        cycles.push_back(std::move(entry));
    }
    Json vc;
    vc["entries"] = std::move(cycles);
    vc["htilde_sheaf"] = json_chern(ledger.htilde_sheaf);
    vc["htilde_twisted"] = json_chern(ledger.htilde_twisted);
    vc["htilde_difference_is_point"] = ledger.htilde_difference_is_point;
    vc["htilde_self_pairing"] = json_int(ledger.htilde_self_pairing);
    vc["gauge"] = ledger.gauge;
    result["vanishing_cycles"] = std::move(vc);
    return envelope("classes", triple_config(t), std::move(result));
}

} // namespace tpqr::report
