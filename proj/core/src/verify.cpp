#include "arcperm/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "arcperm/arc_families.hpp"
#include "arcperm/arc_graph.hpp"
#include "arcperm/bijections.hpp"
#include "arcperm/characters.hpp"
#include "arcperm/descent_stats.hpp"
#include "arcperm/patterns.hpp"
#include "arcperm/rsk.hpp"
#include "arcperm/shuffles.hpp"
#include "arcperm/tableaux.hpp"
#include "arcperm/weak_order.hpp"

namespace arcperm {

namespace {

void add_row(ClaimReport& report, std::string name, std::string expected, std::string got) {
    const bool pass = expected == got;
    report.rows.push_back({std::move(name), std::move(expected), std::move(got), pass});
}

void add_flag(ClaimReport& report, std::string name, bool ok) {
    add_row(report, std::move(name), "true", ok ? "true" : "false");
}

std::string big(const BigInt& v) { return v.str(); }

// ---- family-counts -------------------------------------------------------

void claim_family_counts(int n, ClaimReport& report) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    add_row(report, tag + "|L_n|", big(pow2(n - 1)),
            std::to_string(generate_family(n, Family::L).size()));
    add_row(report, tag + "|U_n|", big(pow2(n) - 2),
            std::to_string(generate_family(n, Family::U).size()));
    add_row(report, tag + "|A_n|", big(BigInt(n) * pow2(n - 2)),
            std::to_string(generate_family(n, Family::A).size()));
    add_row(report, tag + "|Z_n|", big(pow2(n - 2) * (n - 4) + 2),
            std::to_string(generate_family(n, Family::Z).size()));
}

// ---- patterns ------------------------------------------------------------

void claim_patterns(int n, ClaimReport& report) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    add_flag(report, tag + "arc class = A_n",
             avoidance_class(n, arc_patterns()) == generate_family(n, Family::A));
    add_flag(report, tag + "unimodal class = U_n",
             avoidance_class(n, unimodal_patterns()) == generate_family(n, Family::U));
    add_flag(report, tag + "left-unimodal class = L_n",
             avoidance_class(n, left_unimodal_patterns()) == generate_family(n, Family::L));
    add_flag(report, tag + "shuffle class = union of shuffles",
             avoidance_class(n, shuffle_patterns()) == generate_shuffle_union(n));
}

// ---- maximal-chains ------------------------------------------------------

void claim_maximal_chains(int n, ClaimReport& report) {
    const FinitePoset poset = build_weak_hasse(n, Ground::U);
    const int lo = poset.index_of(Permutation::identity(n).to_wire());
    const int hi = poset.index_of(Permutation::longest(n).to_wire());
    add_row(report, "n=" + std::to_string(n) + " chains in weak order on U_n",
            big(2 * count_shifted_staircase(n)), big(count_maximal_chains(poset, lo, hi)));
}

// ---- xn-geodesics --------------------------------------------------------

void claim_xn_geodesics(int n, ClaimReport& report) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    const ArcGraph g = build_arc_graph(n);
    const int e = g.index_of(Permutation::identity(n));
    const int w0 = g.index_of(Permutation::longest(n));
    add_row(report, tag + "diameter", std::to_string(n * (n - 1) / 2), std::to_string(diameter(g)));
    add_row(report, tag + "d(e,w0)", std::to_string(n * (n - 1) / 2),
            std::to_string(graph_distance(g, e, w0)));
    std::vector<Permutation> on_geodesics;
    for (int w : geodesic_vertices(g, e, w0)) on_geodesics.push_back(g.vertices[w]);
    add_flag(report, tag + "geodesic vertices = U_n",
             on_geodesics == generate_family(n, Family::U));
    add_row(report, tag + "geodesic vertex count", big(pow2(n) - 2),
            std::to_string(on_geodesics.size()));
    const FinitePoset poset = build_weak_hasse(n, Ground::U);
    const BigInt chains = count_maximal_chains(
        poset, poset.index_of(Permutation::identity(n).to_wire()),
        poset.index_of(Permutation::longest(n).to_wire()));
    add_row(report, tag + "geodesic count = chain count", big(chains),
            big(geodesic_count(g, e, w0)));
}

// ---- encodings -----------------------------------------------------------

void claim_encodings(int n, ClaimReport& report) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    bool psi_ok = true, nu_ok = true;
    for (const Permutation& p : generate_family(n, Family::A)) {
        if (!(psi_decode(psi_encode(p)) == p)) psi_ok = false;
        if (!(nu_decode(nu_encode(p)) == p)) nu_ok = false;
    }
    add_flag(report, tag + "psi round-trip on A_n", psi_ok);
    add_flag(report, tag + "nu round-trip on A_n", nu_ok);
}

void claim_encodings_fixed(ClaimReport& report) {
    add_row(report, "psi(4352176)", "3,0,1,0,0,0",
            psi_encode(Permutation::parse("4352176")).to_string());
    add_row(report, "nu(342561)", "ADAAD", nu_encode(Permutation::parse("342561")).to_string());
    add_row(report, "nu(12543)", "A[AD]D", nu_encode(Permutation::parse("12543")).to_string());
    add_row(report, "nu(65781423)", "DAA[DA]DA",
            nu_encode(Permutation::parse("65781423")).to_string());
}

// ---- dominance -----------------------------------------------------------

void claim_dominance(int n, ClaimReport& report) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    add_flag(report, tag + "X_n = dominance Hasse + 2^(n-3) wrap edges",
             check_iso_with_dominance(n));
    if (n <= 6)
        add_flag(report, tag + "prefix-sum distance = Hasse BFS distance",
                 dominance_distance_matches_bfs(n));
}

// ---- descent-stats -------------------------------------------------------

void claim_descent_stats(int n, ClaimReport& report) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    const auto arcs = generate_family(n, Family::A);
    add_flag(report, tag + "arc descent closed form",
             descent_distribution(n, arcs) == arc_descent_closed_form(n));
    add_flag(report, tag + "unimodal descent closed form", unimodal_descent_identity(n));
    add_flag(report, tag + "Z descent closed form",
             descent_distribution(n, generate_family(n, Family::Z)) == z_descent_closed_form(n));
    add_flag(report, tag + "hook descent closed form",
             descent_distribution(n, generate_Hook_n(n)) == hook_descent_closed_form(n));
    if (n >= 4)
        add_flag(report, tag + "T_n descent form (= Z form)",
                 descent_distribution(n, generate_T_n(n)) == z_descent_closed_form(n));
    add_flag(report, tag + "arc maj closed form", maj_polynomial(arcs) == arc_maj_closed_form(n));
    add_flag(report, tag + "Z maj closed form",
             maj_polynomial(generate_family(n, Family::Z)) == z_maj_closed_form(n));
    add_flag(report, tag + "maj = descent form specialized",
             specialize_to_maj(arc_descent_closed_form(n)) == arc_maj_closed_form(n));
}

// ---- tz-equidistribution ---------------------------------------------------

void claim_tz(int n, ClaimReport& report) {
    add_flag(report, "n=" + std::to_string(n) + " descent sets match on T_n and Z_n",
             tz_equidistribution(n));
}

// ---- bijections ------------------------------------------------------------

void claim_bijections(int n, ClaimReport& report) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    const auto zn = generate_family(n, Family::Z);
    const auto tn = generate_T_n(n);
    bool phi_ok = true, des_ok = true, shape_ok = true, psi_ok = true, c_ok = true;
    std::set<StandardTableau> images;
    for (const Permutation& p : zn) {
        const StandardTableau t = phi(p);
        images.insert(t);
        if (!(phi_inverse(t) == p)) phi_ok = false;
        if (!(t.descent_set().mask == p.descent_set().mask)) des_ok = false;
        const StandardTableau t2 = psi_shape_map(p);
        if (!(t2.shape == t.shape)) shape_ok = false;
        if (!(psi_shape_inverse(t2) == p)) psi_ok = false;
        // Entries weakly north and strictly east of the entry 2 are C(p).
        std::set<int> northeast;
        const bool two_in_row = t2.rows[0].size() > 1 && t2.rows[0][1] == 2;
        for (std::size_t j = two_in_row ? 2 : 1; j < t2.rows[0].size(); ++j)
            northeast.insert(t2.rows[0][j]);
        if (!two_in_row) northeast.insert(t2.rows[1][1]);
        if (northeast != c_set(p)) c_ok = false;
    }
    phi_ok = phi_ok && images.size() == zn.size() &&
             std::vector<StandardTableau>(images.begin(), images.end()) == tn;
    add_flag(report, tag + "phi is a bijection onto T_n", phi_ok);
    add_flag(report, tag + "phi preserves descent sets", des_ok);
    add_flag(report, tag + "shape map matches phi's shapes", shape_ok);
    add_flag(report, tag + "shape map round-trips", psi_ok);
    add_flag(report, tag + "entries north-east of 2 equal C(p)", c_ok);
}

void claim_bijections_fixed(ClaimReport& report) {
    add_row(report, "phi(8 9 10 7 11 1 2 6 5 3 4)", "1,2,3,5,8,11/4,7/6/9/10",
            phi(Permutation::parse("8 9 10 7 11 1 2 6 5 3 4")).to_string());
    add_row(report, "phi(2 3 1 4 5 6 12 7 11 10 8 9)", "1,2,4,5,6,7,9,12/3,8/10/11",
            phi(Permutation::parse("2 3 1 4 5 6 12 7 11 10 8 9")).to_string());
    add_row(report, "shape map(10 9 11 8 7 12 1 2 6 5 3 4)", "1,4,7,9,12/2,8/3/5/6/10/11",
            psi_shape_map(Permutation::parse("10 9 11 8 7 12 1 2 6 5 3 4")).to_string());
    add_row(report, "shape map(3 2 4 1 5 6 11 7 10 9 8)", "1,2,4,6,7,9/3,8/5/10/11",
            psi_shape_map(Permutation::parse("3 2 4 1 5 6 11 7 10 9 8")).to_string());
    bool witness = false;  // the shape map does not preserve descent sets
    for (int n = 4; n <= 6 && !witness; ++n)
        for (const Permutation& p : generate_family(n, Family::Z))
            if (!(psi_shape_map(p).descent_set() == p.descent_set())) {
                witness = true;
                break;
            }
    add_flag(report, "shape map alters some descent set (witness, n <= 6)", witness);
}

// ---- regev -----------------------------------------------------------------

void claim_regev(int n, ClaimReport& report) {
    const RegevReport r = verify_regev(n);
    for (const RegevRow& row : r.rows) {
        std::ostringstream got;
        got << row.decomposition << "/" << row.signed_sum;
        std::ostringstream expected;
        expected << row.closed_form << "/" << row.closed_form;
        add_row(report, "n=" + std::to_string(n) + " mu=" + row.mu.to_string() +
                            " decomposition/signed sum", expected.str(), got.str());
    }
}

void claim_regev_fixed(ClaimReport& report) {
    const Partition mu31{{3, 1}};
    add_row(report, "chi_4((3,1)) closed form", "1", std::to_string(regev_character(4, mu31)));
    add_row(report, "chi_4((3,1)) signed sum", "1", std::to_string(signed_sum_arc_mu(4, mu31)));
    const Partition mu5311{{5, 3, 1, 1}};
    add_row(report, "n=10 mu=(5,3,1,1) signed sum", "8",
            std::to_string(signed_sum_arc_mu(10, mu5311)));
    add_row(report, "n=10 mu=(5,3,1,1) closed form", "8",
            std::to_string(regev_character(10, mu5311)));
}

// ---- affine-action ---------------------------------------------------------

void claim_affine_action(int n, ClaimReport& report) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    const auto arcs = generate_family(n, Family::A);
    auto rho = [&](int i, const Permutation& p) { return rho_action(i, p); };
    bool involutions = true, commuting = true, braid3 = true, braid4 = true;
    for (const Permutation& p : arcs) {
        for (int i = 0; i <= n - 2; ++i)
            if (!(rho(i, rho(i, p)) == p)) involutions = false;
        for (int i = 0; i <= n - 2; ++i)
            for (int j = i + 2; j <= n - 2; ++j) {
                Permutation q = rho(j, rho(i, rho(j, rho(i, p))));
                if (!(q == p)) commuting = false;
            }
        for (int i = 1; i < n - 3; ++i) {
            Permutation q = p;
            for (int rep = 0; rep < 3; ++rep) q = rho(i + 1, rho(i, q));
            if (!(q == p)) braid3 = false;
        }
        if (n >= 4) {
            for (int i : {0, n - 3}) {
                Permutation q = p;
                for (int rep = 0; rep < 4; ++rep) q = rho(i + 1, rho(i, q));
                if (!(q == p)) braid4 = false;
            }
        }
    }
    add_flag(report, tag + "generators are involutions", involutions);
    add_flag(report, tag + "distant generators commute", commuting);
    add_flag(report, tag + "interior braid relations (order 3)", braid3);
    add_flag(report, tag + "end braid relations (order 4)", n >= 4 ? braid4 : true);
    add_flag(report, tag + "orbit edges = X_n", schreier_graph_check(n));
    const auto orbits = b_orbits(n);
    bool orbits_ok = static_cast<int>(orbits.size()) == n;
    if (orbits_ok) {
        std::set<std::vector<Permutation>> got;
        for (const auto& orbit : orbits) {
            if (orbit.size() != (1u << (n - 2))) orbits_ok = false;
            got.insert(orbit);
        }
        std::set<std::vector<Permutation>> fibers;
        for (int k = 1; k <= n; ++k) {
            std::vector<Permutation> fiber;
            for (const Permutation& p : arcs)
                if (p(1) == k) fiber.push_back(p);
            fibers.insert(fiber);
        }
        orbits_ok = orbits_ok && got == fibers;
    }
    add_flag(report, tag + "parabolic orbits are first-letter fibers", orbits_ok);
}

// ---- shuffles ----------------------------------------------------------------

void claim_shuffles(int n, ClaimReport& report) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    add_row(report, tag + "shuffle union size", big(pow2(n) - n),
            std::to_string(generate_shuffle_union(n).size()));
    add_flag(report, tag + "pattern class matches", shuffle_pattern_check(n));
    if (n <= 6) {
        const ShuffleOrderReport r = shuffle_weak_order_check(n);
        add_flag(report, tag + "weak-order maxima", r.maxima_ok);
        add_flag(report, tag + "weak-order intervals", r.intervals_ok);
        add_flag(report, tag + "weak-order chain counts", r.chain_counts_ok);
    }
}

void claim_shuffles_fixed(ClaimReport& report) {
    for (int k = 1; k <= 4; ++k) {
        for (int m = k; k * m <= 16; ++m) {
            add_flag(report,
                     "rectangle fillings " + std::to_string(k) + "x" + std::to_string(m),
                     rectangle_filling_check(k, m) && rectangle_filling_check(m, k));
        }
    }
}

struct ClaimSpec {
    int def_lo, def_hi;
    int max_n;
    std::function<void(int, ClaimReport&)> per_n;
    std::function<void(ClaimReport&)> fixed;
};

const std::map<std::string, ClaimSpec>& registry() {
    static const std::map<std::string, ClaimSpec> reg = {
        {"family-counts", {2, 10, 14, claim_family_counts, nullptr}},
        {"patterns", {2, 8, 9, claim_patterns, nullptr}},
        {"maximal-chains", {3, 6, 8, claim_maximal_chains, nullptr}},
        {"xn-geodesics", {2, 7, 9, claim_xn_geodesics, nullptr}},
        {"encodings", {2, 8, 10, claim_encodings, claim_encodings_fixed}},
        {"dominance", {3, 7, 8, claim_dominance, nullptr}},
        {"descent-stats", {2, 8, 10, claim_descent_stats, nullptr}},
        {"tz-equidistribution", {4, 8, 10, claim_tz, nullptr}},
        {"bijections", {4, 8, 10, claim_bijections, claim_bijections_fixed}},
        {"regev", {4, 8, 10, claim_regev, claim_regev_fixed}},
        {"affine-action", {2, 7, 8, claim_affine_action, nullptr}},
        {"shuffles", {2, 8, 9, claim_shuffles, claim_shuffles_fixed}},
    };
    return reg;
}

}  // namespace

std::vector<std::string> registered_claims() {
    std::vector<std::string> out;
    for (const auto& [id, spec] : registry()) out.push_back(id);
    return out;
}

bool claim_known(const std::string& claim) { return registry().count(claim) > 0; }

std::pair<int, int> claim_default_range(const std::string& claim) {
    const auto it = registry().find(claim);
    if (it == registry().end()) throw std::invalid_argument("unknown claim: " + claim);
    return {it->second.def_lo, it->second.def_hi};
}

int claim_max_n(const std::string& claim) {
    const auto it = registry().find(claim);
    if (it == registry().end()) throw std::invalid_argument("unknown claim: " + claim);
    return it->second.max_n;
}

ClaimReport run_claim(const std::string& claim, int lo, int hi) {
    const auto it = registry().find(claim);
    if (it == registry().end()) throw std::invalid_argument("unknown claim: " + claim);
    ClaimReport report;
    report.claim = claim;
    report.lo = lo;
    report.hi = hi;
    if (it->second.fixed) it->second.fixed(report);
    for (int n = lo; n <= hi; ++n) it->second.per_n(n, report);
    report.pass = std::all_of(report.rows.begin(), report.rows.end(),
                              [](const CheckRow& r) { return r.pass; });
    return report;
}

std::string claim_report_to_json(const ClaimReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CheckRow& row : report.rows) {
        nlohmann::json r;
        r["name"] = row.name;
        r["expected"] = row.expected;
        r["got"] = row.got;
        r["pass"] = row.pass;
        rows.push_back(r);
    }
    nlohmann::json j;
    j["claim"] = report.claim;
    j["range"] = {report.lo, report.hi};
    j["checks"] = rows;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

}  // namespace arcperm
