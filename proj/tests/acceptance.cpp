// Acceptance gate: one line per criterion, PASS or FAIL, with the computed
// values next to the pinned expectations. Exits nonzero if any criterion
// fails. Time limits are pinned per criterion and enforced.

#include "ffgs/deformation.hpp"
#include "ffgs/dsl.hpp"
#include "ffgs/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace ffgs;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::pair<uint32_t, uint32_t>> kGrid = {
    {2, 1}, {2, 2}, {3, 1}, {3, 2}};
const std::vector<std::pair<uint32_t, uint32_t>> kSmallGrid = {
    {2, 1}, {2, 2}, {3, 1}};

struct Outcome {
    bool pass;
    std::string detail;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

std::string cell(uint32_t p, uint32_t m) {
    return "(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ")";
}

std::string cell(uint32_t p, uint32_t m, const std::string& k, uint32_t v) {
    return "(p=" + std::to_string(p) + ",m=" + std::to_string(m) + "," + k + "=" +
           std::to_string(v) + ")";
}

struct CliRun {
    int exit_code;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    std::string cmd = std::string(FFGS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// --- criterion bodies ---------------------------------------------------------

Outcome criterion_axioms() {
    size_t groups = 0;
    std::vector<std::string> bad;
    for (auto [p, m] : kGrid) {
        BaseRing R = BaseRing::fp_pi(p);
        auto note = [&](const std::string& label, const AxiomReport& rep) {
            ++groups;
            if (!rep.all_pass()) bad.push_back(label + ": " + rep.witness);
        };
        note("alpha_p" + cell(p, m), check_axioms(alpha_p(R)));
        note("mu" + cell(p, m), check_axioms(mu_pm(R, m)));
        for (uint32_t lam = 1; lam < int_pow(p, m); ++lam)
            note("G" + cell(p, m, "lambda", lam), check_axioms(g_lambda(R, m, lam)));
        for (uint32_t a = 0; a < p; ++a)
            note("H~" + cell(p, m, "a", a), check_axioms(tilde_h(R, m, a)));
    }
    for (auto [p, a, b] : std::vector<std::array<uint32_t, 3>>{
             {2, 2, 1}, {2, 2, 3}, {3, 3, 1}, {3, 6, 5}}) {
        BaseRing Z = BaseRing::zmod(p, 2);
        ++groups;
        AxiomReport rep = check_axioms(oort_tate(Z, a, b));
        if (!rep.all_pass())
            bad.push_back("OT(p=" + std::to_string(p) + ",a=" + std::to_string(a) +
                          "): " + rep.witness);
    }
    if (!bad.empty())
        return {false, "computed failures: " + join(bad, "; ") +
                           "; pinned: all axioms pass"};
    return {true, std::to_string(groups) + " groups, all eight axioms pass"};
}

Outcome criterion_mul_lemma() {
    std::vector<std::string> bad;
    size_t cells = 0;
    for (auto [p, m] : kGrid) {
        BaseRing R = BaseRing::fp_pi(p);
        for (uint32_t lam = 1; lam < int_pow(p, m); ++lam) {
            ++cells;
            HopfPresentation G = g_lambda(R, m, lam);
            bool expect = v_p(p, lam) >= 1;
            bool got = is_killed_by(G, int_pow(p, m));
            if (got != expect)
                bad.push_back(cell(p, m, "lambda", lam) + " killed-by-p^m computed " +
                              (got ? "true" : "false") + ", pinned " +
                              (expect ? "true" : "false"));
            for (uint32_t h = 0; h <= m + 1; ++h)
                if (mult_by_n(G, int_pow(p, h)) != closed_form_power(G, lam, h))
                    bad.push_back(cell(p, m, "lambda", lam) + " closed form differs at h=" +
                                  std::to_string(h));
        }
    }
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, std::to_string(cells) +
                      " grid cells: killed-by-p^m iff p | lambda, closed form "
                      "matches [p^h] for h <= m+1"};
}

Outcome criterion_killed_by_order() {
    std::vector<std::string> bad;
    for (auto [p, m] : kGrid) {
        BaseRing R = BaseRing::fp_pi(p);
        if (!is_killed_by(alpha_p(R), p)) bad.push_back("alpha_p" + cell(p, m));
        if (!is_killed_by(mu_pm(R, m), int_pow(p, m))) bad.push_back("mu" + cell(p, m));
        for (uint32_t lam = 1; lam < int_pow(p, m); ++lam)
            if (!is_killed_by(g_lambda(R, m, lam), int_pow(p, m + 1)))
                bad.push_back("G" + cell(p, m, "lambda", lam));
        for (uint32_t a = 0; a < p; ++a) {
            HopfPresentation H = tilde_h(R, m, a);
            if (!is_killed_by(H, int_pow(p, m + 1)))
                bad.push_back("H~" + cell(p, m, "a", a) + " not killed by its order");
            if (!is_killed_by(H, int_pow(p, m)))
                bad.push_back("H~" + cell(p, m, "a", a) +
                              " computed exponent p^" + std::to_string(exponent(H)) +
                              ", pinned killed-by-p^m");
        }
    }
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, "orders kill every catalog group; the family is killed by p^m"};
}

Outcome criterion_units() {
    std::vector<std::string> bad;
    size_t pairs = 0;
    for (auto [p, m] : kGrid) {
        BaseRing R = BaseRing::fp_pi(p);
        uint32_t pm = int_pow(p, m);
        for (uint32_t u = 2; u < pm && pairs < 24; ++u) {
            if (u % p == 0) continue;
            for (uint32_t lam = 1; lam < pm && pairs < 24; ++lam) {
                ++pairs;
                if (!check_morphism(units_iso(R, m, lam, u)).valid_isomorphism())
                    bad.push_back("u=" + std::to_string(u) + " at " +
                                  cell(p, m, "lambda", lam));
            }
        }
        // Exponent and dim H^2(ad) must be constant on valuation classes.
        BaseRing K = BaseRing::fp(p);
        std::map<uint32_t, std::pair<uint32_t, std::optional<size_t>>> seen;
        for (uint32_t lam = 1; lam < pm; ++lam) {
            uint32_t e = exponent(g_lambda(R, m, lam));
            std::optional<size_t> h2;
            try {
                h2 = cohomology(adjoint_rep(g_lambda(K, m, lam)), 2).dim_h;
            } catch (const BudgetExceeded&) {
            }
            auto [it, fresh] = seen.emplace(v_p(p, lam), std::make_pair(e, h2));
            if (!fresh && it->second != std::make_pair(e, h2))
                bad.push_back("invariants differ inside class v=" +
                              std::to_string(v_p(p, lam)) + " at " +
                              cell(p, m, "lambda", lam));
        }
    }
    if (pairs < 20) bad.push_back("only " + std::to_string(pairs) + " unit pairs");
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, std::to_string(pairs) +
                      " unit pairs give isomorphisms; exponent and dim H^2(ad) "
                      "constant on valuation classes"};
}

Outcome criterion_cohomology() {
    std::vector<std::string> bad;
    // Pinned dimension table over the residue field.
    struct Row {
        uint32_t p, m, lambda, degree;
        const char* rep;
        size_t dim;
    };
    const std::vector<Row> table = {
        {2, 1, 1, 2, "trivial", 1}, {2, 1, 1, 2, "vbar", 2}, {2, 2, 1, 2, "vbar", 1},
        {2, 2, 2, 1, "adjoint", 1}, {2, 2, 2, 2, "vbar", 2}, {2, 2, 2, 2, "trivial", 1},
    };
    for (const Row& r : table) {
        BaseRing K = BaseRing::fp(r.p);
        HopfPresentation G = g_lambda(K, r.m, r.lambda);
        Comodule V = std::string(r.rep) == "trivial"
                         ? trivial_rep(G)
                         : std::string(r.rep) == "vbar" ? vbar_rep(G, r.lambda)
                                                        : adjoint_rep(G);
        size_t got = cohomology(V, r.degree).dim_h;
        if (got != r.dim)
            bad.push_back("dim H^" + std::to_string(r.degree) + "(" + r.rep + ") at " +
                          cell(r.p, r.m, "lambda", r.lambda) + " computed " +
                          std::to_string(got) + ", pinned " + std::to_string(r.dim));
    }
    // Pinned formula: dim H^2(ad) = 1 exactly when v_p(lambda) = m - 1.
    for (auto [p, m] : kSmallGrid) {
        BaseRing K = BaseRing::fp(p);
        for (uint32_t lam = 1; lam < int_pow(p, m); ++lam) {
            Comodule V = adjoint_rep(g_lambda(K, m, lam));
            auto probe = wp_class_cochain(V, lam, 1);
            CohomologyResult res = cohomology(V, 2, kDefaultBudget, probe);
            size_t pinned = v_p(p, lam) + 1 == m ? 1 : 0;
            if (res.dim_h != pinned) {
                bad.push_back("dim H^2(ad) at " + cell(p, m, "lambda", lam) +
                              " computed " + std::to_string(res.dim_h) + ", pinned " +
                              std::to_string(pinned) + " by the edge formula");
                continue;
            }
            if (res.dim_h == 1) {
                bool flagged = false;
                for (const auto& f : res.flags)
                    if (f == "witt-carry-class") flagged = true;
                if (!flagged)
                    bad.push_back("generator at " + cell(p, m, "lambda", lam) +
                                  " is not the Witt carry class");
            }
            if (cohomology(vbar_rep(g_lambda(K, m, lam), lam), 1).dim_h != 0)
                bad.push_back("H^1(vbar) nonzero at " + cell(p, m, "lambda", lam));
        }
        // Characters of mu are rigid in degrees one and two.
        HopfPresentation M = mu_pm(K, m);
        AlgElem oy = add(alg_one(M.A), alg_gen(M.A, 0));
        for (uint32_t j = 0; j < int_pow(p, m); ++j)
            for (uint32_t d = 1; d <= 2; ++d)
                if (cohomology(character_rep(M, pow(oy, j), "chi"), d).dim_h != 0)
                    bad.push_back("H^" + std::to_string(d) + "(chi_" +
                                  std::to_string(j) + ") nonzero at " + cell(p, m));
        // H^2(alpha_p, k) is one-dimensional, spanned by the Witt class.
        Comodule T = trivial_rep(alpha_p(K));
        auto W = wp_class_cochain(T, 1, 0);
        CohomologyResult ap = cohomology(T, 2, kDefaultBudget, W);
        if (ap.dim_h != 1 || is_coboundary(T, 2, W).has_value())
            bad.push_back("H^2(alpha_p, k) at p=" + std::to_string(p) +
                          " computed dim " + std::to_string(ap.dim_h) +
                          ", pinned 1 with non-coboundary Witt generator");
        // d o d = 0 on basis cochains in low degrees.
        HopfPresentation G1 = g_lambda(K, m, 1);
        for (const Comodule& V : {trivial_rep(G1), vbar_rep(G1, 1), adjoint_rep(G1)}) {
            CochainComplex C(V, kDefaultBudget);
            for (uint32_t n = 0; n <= 1; ++n)
                for (size_t i = 0; i < C.width(n); ++i) {
                    FpVec e(C.width(n), 0);
                    e[i] = 1;
                    for (const auto& comp :
                         C.apply_d(n + 1, C.apply_d(n, C.from_coords(n, e))))
                        if (!comp.is_zero())
                            bad.push_back("d o d != 0 for " + V.name + " at " +
                                          cell(p, m));
                }
        }
    }
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, "pinned dimension table, edge formula, character rigidity, Witt "
                  "generators, and d o d = 0 all confirmed"};
}

Outcome criterion_diag_invariants() {
    std::vector<std::string> bad;
    size_t checks = 0;
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {2, 2}}) {
        BaseRing K = BaseRing::fp(p);
        for (uint32_t lam = 1; lam < int_pow(p, m); ++lam) {
            HopfPresentation G = g_lambda(K, m, lam);
            for (const Comodule& V :
                 {trivial_rep(G), vbar_rep(G, lam), adjoint_rep(G)})
                for (uint32_t d = 1; d <= 2; ++d) {
                    ++checks;
                    size_t full = cohomology(V, d).dim_h;
                    DiagInvariantsResult di =
                        diagonalizable_invariants(G, lam, V, d, kDefaultBudget);
                    if (full != di.dim)
                        bad.push_back(V.name + " degree " + std::to_string(d) +
                                      " at " + cell(p, m, "lambda", lam) +
                                      ": full " + std::to_string(full) +
                                      " != restricted " + std::to_string(di.dim));
                }
        }
    }
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, std::to_string(checks) +
                      " comparisons: weight-zero subcomplex matches the full "
                      "complex in degrees 1 and 2"};
}

Outcome criterion_adjoint() {
    std::vector<std::string> bad;
    for (auto [p, m] : kGrid) {
        BaseRing K = BaseRing::fp(p);
        for (uint32_t lam = 1; lam < int_pow(p, m); ++lam) {
            HopfPresentation G = g_lambda(K, m, lam);
            Comodule V = adjoint_rep(G);
            AlgElem oy = add(alg_one(G.A), alg_gen(G.A, 1));
            bool ok = V.action[0][0] == pow(oy, lam) &&
                      V.action[0][1] ==
                          neg(scalar_mul(K.from_int(lam), alg_gen(G.A, 0))) &&
                      V.action[1][0] == alg_zero(G.A) && V.action[1][1] == alg_one(G.A);
            if (!ok || !check_comodule(V).ok())
                bad.push_back(cell(p, m, "lambda", lam));
        }
    }
    if (!bad.empty())
        return {false, "adjoint matrix differs from ((1+y)^lambda, -lambda x; 0, 1) "
                       "at " + join(bad, "; ")};
    return {true, "adjoint action is exactly ((1+y)^lambda, -lambda x; 0, 1) on the "
                  "full grid"};
}

Outcome criterion_char_p2() {
    std::vector<std::string> bad;
    for (uint32_t p : {2u, 3u}) {
        BaseRing K = BaseRing::fp(p);
        DeformationDatum base = trivial_datum(K, 1, 1);
        std::mt19937 rng(911 + p);
        for (int trial = 0; trial < 100; ++trial) {
            RawPoly raw;
            for (const auto& mono : base.Ak->basis()) {
                bool constant = true;
                for (auto e : mono)
                    if (e) constant = false;
                if (constant) continue;
                uint32_t c = rng() % p;
                if (c) raw.emplace_back(mono, c);
            }
            DeformationDatum D =
                make_datum(K, 1, 1, normal_form(base.Ak, raw), alg_zero(base.Ak),
                           alg_zero(base.Tk2), alg_zero(base.Tk2));
            uint32_t obs = char_obstruction(D);
            if (obs != 1) {
                bad.push_back("p=" + std::to_string(p) + " trial " +
                              std::to_string(trial) + " computed obstruction " +
                              std::to_string(obs) + ", pinned 1");
                break;
            }
        }
    }
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {2, 2}}) {
        BaseRing Z = BaseRing::zmod(p, 2);
        ClassifyResult res = classify(Z, m, int_pow(p, m - 1));
        size_t passing = 0;
        for (const auto& v : res.verdicts)
            if (v.axioms_pass) ++passing;
        if (passing != 0)
            bad.push_back(cell(p, m) + " over Z/p^2: " + std::to_string(passing) +
                          " candidates pass the axioms, pinned 0");
    }
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, "200 random twists have unit obstruction; no candidate is "
                  "well-defined over Z/p^2"};
}

Outcome criterion_family() {
    std::vector<std::string> bad;
    for (auto [p, m] : kSmallGrid) {
        BaseRing R = BaseRing::fp_pi(p);
        uint32_t lam = int_pow(p, m - 1);
        for (uint32_t a = 0; a < p; ++a)
            for (uint32_t a2 = 0; a2 < p; ++a2) {
                bool found = infinitesimal_iso(tilde_h(R, m, a), tilde_h(R, m, a2), lam)
                                 .found;
                bool pinned = a == a2;
                if (found != pinned)
                    bad.push_back(cell(p, m, "a", a) + " vs a'=" + std::to_string(a2) +
                                  ": computed " + (found ? "isomorphic" : "distinct") +
                                  ", pinned " + (pinned ? "isomorphic" : "distinct"));
            }
        // The p members must realize p distinct cohomology classes.
        HopfPresentation H0 = tilde_h(R, m, 0);
        std::set<FpVec> classes;
        for (uint32_t a = 0; a < p; ++a) {
            LawDifference d = group_law_difference(tilde_h(R, m, a), H0, lam);
            if (!d.closed) {
                bad.push_back(cell(p, m, "a", a) + ": law difference not closed");
                continue;
            }
            classes.insert(d.class_coords);
        }
        if (classes.size() != p)
            bad.push_back(cell(p, m) + ": computed " +
                          std::to_string(classes.size()) +
                          " distinct classes, pinned " + std::to_string(p));
    }
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, "isomorphism matrix is diagonal and the family realizes p "
                  "distinct classes at every point"};
}

Outcome criterion_quotients() {
    std::vector<std::string> bad;
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {2, 2}}) {
        BaseRing R = BaseRing::fp_pi(p);
        BaseRing K = BaseRing::fp(p);
        for (uint32_t lam = 1; lam < int_pow(p, m); ++lam) {
            HopfPresentation G = g_lambda(R, m, lam);
            QuotientResult Q = quotient_subalgebra(G, {1});
            if (!(Q.closed_under_mul && Q.comul_stable && Q.monogenic && Q.induced)) {
                bad.push_back("quotient at " + cell(p, m, "lambda", lam) + ": " +
                              Q.note);
                continue;
            }
            HopfPresentation M = mu_pm(R, m);
            HopfMorphism phi{M, *Q.induced, {alg_gen(Q.induced->A, 0)}};
            if (!check_morphism(phi).valid_isomorphism())
                bad.push_back("induced quotient not mu at " +
                              cell(p, m, "lambda", lam));
            std::vector<AlgElem> xs;
            for (uint32_t i = 0; i < p; ++i) xs.push_back(pow(alg_gen(G.A, 0), i));
            if (!free_over(G.A, Q.basis, xs).free)
                bad.push_back("not free of rank p at " + cell(p, m, "lambda", lam));
            ConjugationReport c = conjugation_factors_through(G, {0});
            if (!c.n_is_subgroup || !c.factors)
                bad.push_back("conjugation fails for G at " +
                              cell(p, m, "lambda", lam) + ": " + c.witness);
        }
        for (uint32_t a = 0; a < p; ++a) {
            ConjugationReport c = conjugation_factors_through(tilde_h(R, m, a), {0});
            if (!c.n_is_subgroup || !c.factors)
                bad.push_back("conjugation computed non-factoring for H~" +
                              cell(p, m, "a", a) + " (" + c.witness +
                              "), pinned factoring");
        }
        MuRigidityReport mu = mu_rigidity_check(K, m);
        if (!mu.rigid)
            bad.push_back("mu not rigid at " + cell(p, m) + ": closed " +
                          std::to_string(mu.closed_dim) + " vs coboundaries " +
                          std::to_string(mu.coboundary_dim));
    }
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, "B = O(mu) with free rank-p module structure, conjugation factors "
                  "through the kernel, and mu admits no law twists"};
}

Outcome criterion_reproduce() {
    fs::path tmp = fs::temp_directory_path() / "ffgs_acceptance_report.json";
    CliRun run = run_cli("report --jobs 4 --json " + tmp.string());
    std::vector<std::string> bad;
    if (run.exit_code != 1)
        bad.push_back("grid exit code computed " + std::to_string(run.exit_code) +
                      ", pinned 1 (documented refutations present)");
    std::ifstream in(tmp);
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    std::string why;
    if (!report::validate_json(text, &why)) bad.push_back("schema: " + why);
    if (bad.empty()) {
        auto doc = nlohmann::json::parse(text);
        size_t refuted = 0, verified = 0;
        std::set<std::string> deviations;
        std::set<std::string> h2_refuted;
        for (const auto& c : doc["claims"]) {
            std::string status = c["status"].get<std::string>();
            if (status == "refuted") ++refuted;
            if (status == "verified") ++verified;
            std::string witness = c["witness"].get<std::string>();
            for (const char* code : {"law-display-not-closed", "family-collapse",
                                     "algebra-twist-survives"})
                if (witness.find(code) != std::string::npos) deviations.insert(code);
            if (c["claim_id"] == "h2-adjoint-dim-formula" && status == "refuted")
                h2_refuted.insert(c["parameters"]["p"].get<std::string>() + "," +
                                  c["parameters"]["m"].get<std::string>() + "," +
                                  c["parameters"]["lambda"].get<std::string>());
        }
        if (verified == 0) bad.push_back("no verified claims in the grid report");
        if (refuted == 0) bad.push_back("no refuted claims; deviations are pinned");
        if (deviations.size() != 3)
            bad.push_back("deviation records computed " +
                          std::to_string(deviations.size()) + "/3 kinds, pinned all "
                          "of law-display-not-closed, family-collapse, "
                          "algebra-twist-survives");
        std::set<std::string> pinned_h2 = {"2,1,1", "3,1,1", "3,1,2"};
        if (h2_refuted != pinned_h2)
            bad.push_back(
                "edge-formula refutations computed at {" +
                join(std::vector<std::string>(h2_refuted.begin(), h2_refuted.end()),
                     " ") +
                "}, pinned {2,1,1 3,1,1 3,1,2}");
    }
    fs::remove(tmp);
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, "grid report is schema-valid with the three pinned deviation "
                  "kinds and edge-formula refutations exactly at the m = 1 cells"};
}

Outcome criterion_dsl_cli() {
    std::vector<std::string> bad;
    fs::path dsl_dir = fs::path(FFGS_SOURCE_DIR) / "dsl";
    size_t golden = 0;
    for (const auto& entry : fs::directory_iterator(dsl_dir)) {
        if (entry.path().extension() != ".ffgs") continue;
        ++golden;
        std::ifstream in(entry.path());
        std::ostringstream ss;
        ss << in.rdbuf();
        try {
            dsl::SourceFile f = dsl::parse(ss.str());
            if (dsl::print(f) != ss.str())
                bad.push_back(entry.path().filename().string() + " is not canonical");
        } catch (const dsl::ParseError& e) {
            bad.push_back(entry.path().filename().string() + ": " + e.what());
        }
    }
    if (golden < 5) bad.push_back("only " + std::to_string(golden) + " golden files");
    size_t malformed = 0;
    for (const auto& entry : fs::directory_iterator(
             fs::path(FFGS_SOURCE_DIR) / "tests" / "data" / "malformed")) {
        if (entry.path().extension() != ".ffgs") continue;
        ++malformed;
        std::string want = entry.path().filename().string().substr(0, 4);
        want[0] = 'E';
        std::ifstream in(entry.path());
        std::ostringstream ss;
        ss << in.rdbuf();
        try {
            (void)dsl::parse(ss.str());
            bad.push_back(entry.path().filename().string() + " parsed cleanly");
        } catch (const dsl::ParseError& e) {
            if (e.diag().code != want)
                bad.push_back(entry.path().filename().string() + " computed " +
                              e.diag().code + ", pinned " + want);
        }
    }
    if (malformed < 10)
        bad.push_back("only " + std::to_string(malformed) + " malformed cases");
    if (run_cli("verify --p 2 --m 1 --lambda 1").exit_code != 0)
        bad.push_back("verify exit code != 0");
    if (run_cli("killed-by --p 2 --m 1 --lambda 1 --n 2").exit_code != 1)
        bad.push_back("refuting run exit code != 1");
    if (run_cli("no-such-subcommand").exit_code != 2)
        bad.push_back("usage error exit code != 2");
    if (!bad.empty()) return {false, join(bad, "; ")};
    return {true, std::to_string(golden) + " golden files round-trip canonically, " +
                      std::to_string(malformed) +
                      " malformed cases diagnosed, exit codes 0/1/2 observed"};
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        double limit_s;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "Hopf axioms across the catalog", 30.0, criterion_axioms},
        {2, "multiplication lemma and closed form", 60.0, criterion_mul_lemma},
        {3, "killed by order and family p^m bound", 60.0, criterion_killed_by_order},
        {4, "unit rescaling isomorphisms and class invariants", 30.0, criterion_units},
        {5, "cohomology dimension tables", 180.0, criterion_cohomology},
        {6, "diagonalizable invariants cross-check", 120.0, criterion_diag_invariants},
        {7, "adjoint representation matrix", 10.0, criterion_adjoint},
        {8, "characteristic p^2 obstruction", 120.0, criterion_char_p2},
        {9, "deformation family isomorphism classes", 120.0, criterion_family},
        {10, "quotients, freeness, conjugation, rigidity", 120.0, criterion_quotients},
        {11, "grid report with deviation records", 600.0, criterion_reproduce},
        {12, "model files and command-line contract", 10.0, criterion_dsl_cli},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (secs > c.limit_s) {
            o.pass = false;
            o.detail += " [time limit exceeded]";
        }
        std::printf("%s criterion-%d: %s -- %s [%.2fs, limit %.0fs]\n",
                    o.pass ? "PASS" : "FAIL", c.number, c.title, o.detail.c_str(),
                    secs, c.limit_s);
        if (!o.pass) ++failures;
    }
    std::printf("%d of %zu criteria pass\n",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
