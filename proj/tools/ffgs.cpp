// ffgs: construct finite flat group schemes as explicit Hopf algebras over
// small Artin local rings and verify their structure exactly.
//
// Exit codes: 0 all claims verified, 1 at least one refuted claim or
// deviation, 2 usage or parse error.

#include "ffgs/deformation.hpp"
#include "ffgs/dsl.hpp"
#include "ffgs/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace ffgs;
using report::ClaimRecord;
using report::Report;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string u32s(uint32_t v) { return std::to_string(v); }

// Outcome of one checked claim: status + witness.
struct Outcome {
    std::string status;
    std::string witness;
};

Outcome pass_fail(bool ok, const std::string& witness = "") {
    return {ok ? report::kVerified : report::kRefuted, witness};
}

ClaimRecord run_claim(const std::string& id,
                      std::map<std::string, std::string> params,
                      const std::function<Outcome()>& f) {
    ClaimRecord rec;
    rec.claim_id = id;
    rec.parameters = std::move(params);
    auto t0 = Clock::now();
    try {
        Outcome o = f();
        rec.status = o.status;
        rec.witness = o.witness;
    } catch (const BudgetExceeded& e) {
        rec.status = report::kSkipped;
        rec.witness = std::string("budget: ") + e.what();
    } catch (const std::exception& e) {
        rec.status = report::kRefuted;
        rec.witness = std::string("exception: ") + e.what();
    }
    rec.wall_time_ms = ms_since(t0);
    return rec;
}

void print_claim(const ClaimRecord& c) {
    std::string params;
    for (const auto& [k, v] : c.parameters) {
        if (!params.empty()) params += " ";
        params += k + "=" + v;
    }
    std::cout << "[" << c.status << "] " << c.claim_id;
    if (!params.empty()) std::cout << " {" << params << "}";
    if (!c.witness.empty()) std::cout << " -- " << c.witness;
    std::cout << "\n";
}

int finish(Report& rep, const std::string& json_path) {
    report::sort_claims(rep);
    for (const auto& c : rep.claims) print_claim(c);
    std::cout << rep.claims.size() << " claims: " << rep.count(report::kVerified)
              << " verified, " << rep.count(report::kRefuted) << " refuted, "
              << rep.count(report::kSkipped) << " skipped\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write '" << json_path << "'\n";
            return 2;
        }
        out << report::to_json(rep);
    }
    return rep.any_refuted() ? 1 : 0;
}

// --- group resolution -------------------------------------------------------

struct GroupOpts {
    std::string input;
    uint32_t p = 2, m = 1, lambda = 1;
    int32_t a = -1; // >= 0 selects the deformation family
    std::string ring = "fp-pi2";
};

BaseRing ring_of(const GroupOpts& o) {
    if (o.ring == "fp") return BaseRing::fp(o.p);
    if (o.ring == "fp-pi2") return BaseRing::fp_pi(o.p);
    if (o.ring == "zmod-p2") return BaseRing::zmod(o.p, 2);
    throw CLI::ValidationError("--ring must be one of fp, fp-pi2, zmod-p2");
}

struct Resolved {
    HopfPresentation G;
    std::string label;
    std::map<std::string, std::string> params;
    std::string digest_src;
    bool catalog_g_lambda = false;
    uint32_t p = 2, m = 1, lambda = 1;
    std::vector<dsl::ComoduleDecl> comodules;
};

Resolved resolve(const GroupOpts& o) {
    Resolved r;
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw std::runtime_error("cannot open '" + o.input + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        dsl::SourceFile f = dsl::parse(text);
        if (!f.hopf.A)
            throw dsl::ParseError({"E007", "missing algebra declaration", 1, 1});
        r.G = f.hopf;
        r.label = f.algebra_name;
        r.params["input"] = o.input;
        r.params["ring"] = f.ring.name();
        r.digest_src = text;
        r.comodules = f.comodules;
        r.p = f.ring.p();
        r.m = o.m;
        r.lambda = o.lambda;
        return r;
    }
    BaseRing R = ring_of(o);
    r.p = o.p;
    r.m = o.m;
    r.lambda = o.lambda;
    r.params = {{"p", u32s(o.p)}, {"m", u32s(o.m)}, {"ring", R.name()}};
    if (o.a >= 0) {
        r.G = tilde_h(R, o.m, static_cast<uint32_t>(o.a));
        r.label = "H_tilde(p=" + u32s(o.p) + ",m=" + u32s(o.m) +
                  ",a=" + u32s(static_cast<uint32_t>(o.a)) + ")";
        r.params["a"] = u32s(static_cast<uint32_t>(o.a));
        r.lambda = int_pow(o.p, o.m - 1);
    } else {
        r.G = g_lambda(R, o.m, o.lambda);
        r.label = "G_lambda(p=" + u32s(o.p) + ",m=" + u32s(o.m) +
                  ",lambda=" + u32s(o.lambda) + ")";
        r.params["lambda"] = u32s(o.lambda);
        r.catalog_g_lambda = true;
    }
    r.digest_src = r.label + "/" + R.name();
    return r;
}

Comodule rep_of(const std::string& which, const Resolved& r) {
    if (which == "trivial") return trivial_rep(r.G);
    if (which == "vbar") return vbar_rep(r.G, r.lambda);
    if (which == "adjoint") return adjoint_rep(r.G);
    for (const auto& cd : r.comodules)
        if (cd.name == which) return cd.comodule;
    throw CLI::ValidationError("--rep must be trivial, vbar, adjoint, or a "
                               "comodule declared in the input file");
}

// --- subcommands -------------------------------------------------------------

int cmd_verify(const GroupOpts& o, const std::string& json_path) {
    Resolved r = resolve(o);
    Report rep;
    rep.input_digest = report::digest_hex(r.digest_src);
    rep.add(run_claim("hopf-axioms:" + r.label, r.params, [&] {
        AxiomReport a = check_axioms(r.G);
        return pass_fail(a.all_pass(), a.witness);
    }));
    for (const auto& cd : r.comodules) {
        rep.add(run_claim("comodule-axioms:" + r.label + ":" + cd.name, r.params, [&] {
            ComoduleReport c = check_comodule(cd.comodule);
            return pass_fail(c.ok(), c.witness);
        }));
    }
    return finish(rep, json_path);
}

int cmd_mul_by_n(const GroupOpts& o, uint32_t n, const std::string& json_path) {
    Resolved r = resolve(o);
    Report rep;
    rep.input_digest = report::digest_hex(r.digest_src + "/[n]=" + u32s(n));
    auto params = r.params;
    params["n"] = u32s(n);
    rep.add(run_claim("mul-by-n-paths-agree:" + r.label, params, [&] {
        auto fold = mult_by_n(r.G, n);
        auto conv = mult_by_n_convolution(r.G, n);
        if (fold != conv) return pass_fail(false, "fold and convolution differ");
        std::string images;
        for (size_t i = 0; i < fold.size(); ++i) {
            if (i) images += "; ";
            images += "[" + u32s(n) + "]" + r.G.A->names()[i] + " = " + show(fold[i]);
        }
        return pass_fail(true, images);
    }));
    if (r.catalog_g_lambda) {
        uint32_t h = 0, q = 1;
        while (q < n) {
            q *= r.p;
            ++h;
        }
        if (q == n) {
            rep.add(run_claim("mul-by-n-closed-form:" + r.label, params, [&] {
                return pass_fail(mult_by_n(r.G, n) ==
                                     closed_form_power(r.G, r.lambda, h),
                                 "[p^h] closed form, h=" + u32s(h));
            }));
        }
    }
    return finish(rep, json_path);
}

int cmd_killed_by(const GroupOpts& o, uint32_t n, const std::string& json_path) {
    Resolved r = resolve(o);
    Report rep;
    rep.input_digest = report::digest_hex(r.digest_src + "/killed-by=" + u32s(n));
    auto params = r.params;
    params["n"] = u32s(n);
    rep.add(run_claim("killed-by:" + r.label, params, [&] {
        bool ok = is_killed_by(r.G, n);
        return pass_fail(ok, ok ? "[" + u32s(n) + "] factors through the counit"
                                : "[" + u32s(n) + "] does not kill the augmentation ideal");
    }));
    return finish(rep, json_path);
}

int cmd_exponent(const GroupOpts& o, const std::string& json_path) {
    Resolved r = resolve(o);
    Report rep;
    rep.input_digest = report::digest_hex(r.digest_src + "/exponent");
    rep.add(run_claim("exponent:" + r.label, r.params, [&] {
        uint32_t h = exponent(r.G);
        return Outcome{report::kVerified,
                       "exponent h = " + u32s(h) + " (killed by " +
                           u32s(int_pow(r.G.base().p(), h)) + ")"};
    }));
    return finish(rep, json_path);
}

int cmd_cohomology(const GroupOpts& o, const std::string& which, uint32_t degree,
                   uint64_t budget, const std::string& json_path) {
    Resolved r = resolve(o);
    Report rep;
    rep.input_digest = report::digest_hex(r.digest_src + "/H^" + u32s(degree) + "(" +
                                          which + ")");
    auto params = r.params;
    params["rep"] = which;
    params["degree"] = u32s(degree);
    rep.add(run_claim("cohomology-dim:" + r.label + ":" + which, params, [&] {
        Comodule V = rep_of(which, r);
        std::optional<Cochain> probe;
        if (degree == 2 && which == "adjoint" && r.G.A->gen_count() == 2)
            probe = wp_class_cochain(V, r.lambda, 1);
        if (degree == 2 && which == "trivial" && r.G.A->gen_count() == 1)
            probe = wp_class_cochain(V, r.lambda, 0);
        CohomologyResult res = cohomology(V, degree, budget, probe);
        std::string w = "dim H^" + u32s(degree) + " = " + std::to_string(res.dim_h) +
                        " (kernel " + std::to_string(res.dim_kernel) + ", image " +
                        std::to_string(res.dim_image) + ")";
        for (size_t i = 0; i < res.flags.size(); ++i)
            if (!res.flags[i].empty())
                w += "; representative " + std::to_string(i) + ": " + res.flags[i];
        return Outcome{report::kVerified, w};
    }));
    return finish(rep, json_path);
}

int cmd_adjoint(const GroupOpts& o, const std::string& json_path) {
    Resolved r = resolve(o);
    Report rep;
    rep.input_digest = report::digest_hex(r.digest_src + "/adjoint");
    Comodule V = adjoint_rep(r.G);
    for (size_t i = 0; i < V.rank; ++i) {
        std::string row;
        for (size_t j = 0; j < V.rank; ++j) {
            if (j) row += ",  ";
            row += show(V.action[i][j]);
        }
        std::cout << "ad[" << i << "] = [" << row << "]\n";
    }
    rep.add(run_claim("adjoint-comodule:" + r.label, r.params, [&] {
        ComoduleReport c = check_comodule(V);
        return pass_fail(c.ok(), c.witness);
    }));
    if (r.catalog_g_lambda) {
        rep.add(run_claim("adjoint-matrix:" + r.label, r.params, [&] {
            const auto& A = r.G.A;
            const BaseRing& R = A->base();
            AlgElem oy = add(alg_one(A), alg_gen(A, 1));
            bool ok = V.action[0][0] == pow(oy, r.lambda) &&
                      V.action[0][1] ==
                          neg(scalar_mul(R.from_int(r.lambda), alg_gen(A, 0))) &&
                      V.action[1][0] == alg_zero(A) && V.action[1][1] == alg_one(A);
            return pass_fail(ok, ok ? "((1+y)^lambda, -lambda x; 0, 1)"
                                    : "matrix differs from ((1+y)^lambda, -lambda x; 0, 1)");
        }));
    }
    return finish(rep, json_path);
}

int cmd_quotient(const GroupOpts& o, const std::string& json_path) {
    Resolved r = resolve(o);
    Report rep;
    rep.input_digest = report::digest_hex(r.digest_src + "/quotient");
    if (r.G.base().kind() != RingKind::FpPi) {
        rep.add({"quotient-monogenic:" + r.label, r.params, report::kSkipped,
                 "quotient solve requires an F_p-linear base", 0.0});
        return finish(rep, json_path);
    }
    size_t j_gen = r.G.A->gen_count() > 1 ? 1 : 0;
    QuotientResult Q = quotient_subalgebra(r.G, {j_gen});
    rep.add(run_claim("quotient-monogenic:" + r.label, r.params, [&] {
        return pass_fail(Q.closed_under_mul && Q.comul_stable && Q.monogenic, Q.note);
    }));
    if (Q.induced && r.G.A->gen_count() == 2) {
        rep.add(run_claim("quotient-mu-iso:" + r.label, r.params, [&] {
            HopfPresentation M = mu_pm(r.G.base(), r.m);
            HopfMorphism phi{M, *Q.induced, {alg_gen(Q.induced->A, 0)}};
            MorphismReport mr = check_morphism(phi);
            return pass_fail(mr.valid_isomorphism(), mr.witness);
        }));
        rep.add(run_claim("freeness-rank-p:" + r.label, r.params, [&] {
            std::vector<AlgElem> xp;
            for (uint32_t i = 0; i < r.p; ++i)
                xp.push_back(pow(alg_gen(r.G.A, 0), i));
            FreenessReport fr = free_over(r.G.A, Q.basis, xp);
            return pass_fail(fr.free, "module rank " + std::to_string(fr.rank));
        }));
    }
    return finish(rep, json_path);
}

int cmd_classify(const GroupOpts& o, uint64_t budget, const std::string& json_path) {
    BaseRing R = ring_of(o);
    if (R.length() != 2)
        throw CLI::ValidationError("classify requires a length-2 base "
                                   "(--ring fp-pi2 or zmod-p2)");
    Report rep;
    rep.input_digest = report::digest_hex("classify/" + R.name() + "/m=" + u32s(o.m) +
                                          "/lambda=" + u32s(o.lambda));
    ClassifyResult res = classify(R, o.m, o.lambda, budget);
    std::map<std::string, std::string> base_params = {
        {"p", u32s(o.p)}, {"m", u32s(o.m)}, {"lambda", u32s(o.lambda)},
        {"ring", R.name()}};
    for (const auto& v : res.verdicts) {
        auto params = base_params;
        params["c"] = u32s(v.c);
        params["a"] = u32s(v.a);
        params["law_shape"] = v.law_shape;
        ClaimRecord rec;
        rec.claim_id = "classification-verdict";
        rec.parameters = params;
        rec.status = v.matches_prediction ? report::kVerified : report::kRefuted;
        std::string w = "axioms=" + std::string(v.axioms_pass ? "pass" : "fail");
        if (v.axioms_pass) {
            w += ", killed-by-order=" + std::string(v.killed_by_order ? "yes" : "no");
            if (v.exp) w += ", exponent=" + u32s(*v.exp);
            if (R.kind() == RingKind::FpPi) {
                w += ", quotient-monogenic=" +
                     std::string(v.quotient_monogenic ? "yes" : "no");
                w += ", free-rank-p=" + std::string(v.free_rank_p ? "yes" : "no");
            }
            w += ", conj-factors=" + std::string(v.conj_factors ? "yes" : "no");
            if (v.iso_to_family_a)
                w += ", iso-to-family-a=" + u32s(*v.iso_to_family_a);
        }
        if (!v.deviation.empty()) w += " | deviation: " + v.deviation;
        rec.witness = w;
        rep.add(std::move(rec));
    }
    {
        ClaimRecord rec;
        rec.claim_id = "h2-adjoint-dim";
        rec.parameters = base_params;
        if (res.h2_dim) {
            rec.status = report::kVerified;
            rec.witness = "dim H^2(ad) = " + std::to_string(*res.h2_dim);
        } else {
            rec.status = report::kSkipped;
            rec.witness = "degree-2 matrix exceeds the cell budget";
        }
        rep.add(std::move(rec));
    }
    return finish(rep, json_path);
}

// --- the grid report (traceability matrix) -----------------------------------

using Task = std::function<ClaimRecord()>;

void grid_tasks(uint32_t p, uint32_t m, uint64_t budget, std::vector<Task>& tasks) {
    const uint32_t pm = int_pow(p, m);
    BaseRing R2 = BaseRing::fp_pi(p);
    BaseRing K = BaseRing::fp(p);
    BaseRing Z = BaseRing::zmod(p, 2);
    std::map<std::string, std::string> pm_params = {
        {"p", u32s(p)}, {"m", u32s(m)}, {"ring", R2.name()}};
    auto with = [pm_params](std::initializer_list<std::pair<std::string, std::string>> kv) {
        auto out = pm_params;
        for (auto& [k, v] : kv) out[k] = v;
        return out;
    };

    // Axiom suite.
    tasks.push_back([=] {
        return run_claim("axioms:alpha_p", pm_params, [&] {
            AxiomReport a = check_axioms(alpha_p(R2));
            return pass_fail(a.all_pass(), a.witness);
        });
    });
    tasks.push_back([=] {
        return run_claim("axioms:mu_pm", pm_params, [&] {
            AxiomReport a = check_axioms(mu_pm(R2, m));
            return pass_fail(a.all_pass(), a.witness);
        });
    });
    for (uint32_t lam = 1; lam < pm; ++lam) {
        tasks.push_back([=] {
            return run_claim("axioms:G_lambda", with({{"lambda", u32s(lam)}}), [&] {
                AxiomReport a = check_axioms(g_lambda(R2, m, lam));
                return pass_fail(a.all_pass(), a.witness);
            });
        });
    }
    for (uint32_t a = 0; a < p; ++a) {
        tasks.push_back([=] {
            return run_claim("axioms:H_tilde", with({{"a", u32s(a)}}), [&] {
                AxiomReport rep = check_axioms(tilde_h(R2, m, a));
                return pass_fail(rep.all_pass(), rep.witness);
            });
        });
    }
    if (m == 1) {
        // Oort-Tate instances a*b = p over Z/p^2, once per prime.
        std::vector<std::pair<uint32_t, uint32_t>> pairs = {{p, 1}, {1, p}};
        pairs.push_back(p == 2 ? std::make_pair(2u, 3u) : std::make_pair(6u, 5u));
        for (auto [a, b] : pairs) {
            tasks.push_back([=] {
                auto params = std::map<std::string, std::string>{
                    {"p", u32s(p)}, {"a", u32s(a)}, {"b", u32s(b)}, {"ring", Z.name()}};
                return run_claim("axioms:oort_tate", params, [&] {
                    HopfPresentation OT = oort_tate(Z, a, b);
                    AxiomReport rep = check_axioms(OT);
                    if (!rep.all_pass()) return pass_fail(false, rep.witness);
                    return pass_fail(is_killed_by(OT, p), "killed by its order p");
                });
            });
        }
    }

    // Multiplication lemma grid + closed form.
    for (uint32_t lam = 1; lam < pm; ++lam) {
        tasks.push_back([=] {
            return run_claim("mul-lemma:killed-by-p^m", with({{"lambda", u32s(lam)}}),
                             [&] {
                                 HopfPresentation G = g_lambda(R2, m, lam);
                                 bool expect = v_p(p, lam) >= 1;
                                 bool got = is_killed_by(G, pm);
                                 return pass_fail(
                                     got == expect,
                                     "killed-by-p^m=" + std::string(got ? "yes" : "no") +
                                         ", v_p(lambda)=" + u32s(v_p(p, lam)));
                             });
        });
        tasks.push_back([=] {
            return run_claim("mul-lemma:closed-form", with({{"lambda", u32s(lam)}}),
                             [&] {
                                 HopfPresentation G = g_lambda(R2, m, lam);
                                 for (uint32_t h = 0; h <= m + 1; ++h)
                                     if (mult_by_n(G, int_pow(p, h)) !=
                                         closed_form_power(G, lam, h))
                                         return pass_fail(false, "h=" + u32s(h));
                                 return pass_fail(true, "h <= m+1");
                             });
        });
    }

    // Killed by order.
    for (uint32_t lam = 1; lam < pm; ++lam) {
        tasks.push_back([=] {
            return run_claim("killed-by-order:G_lambda", with({{"lambda", u32s(lam)}}),
                             [&] {
                                 HopfPresentation G = g_lambda(R2, m, lam);
                                 return pass_fail(is_killed_by(G, int_pow(p, m + 1)),
                                                  "order p^(m+1)");
                             });
        });
    }
    for (uint32_t a = 0; a < p; ++a) {
        tasks.push_back([=] {
            return run_claim("killed-by-order:H_tilde", with({{"a", u32s(a)}}), [&] {
                HopfPresentation H = tilde_h(R2, m, a);
                return pass_fail(is_killed_by(H, int_pow(p, m + 1)), "order p^(m+1)");
            });
        });
        tasks.push_back([=] {
            return run_claim("killed-by-p^m:H_tilde", with({{"a", u32s(a)}}), [&] {
                HopfPresentation H = tilde_h(R2, m, a);
                bool got = is_killed_by(H, pm);
                return pass_fail(got, got ? "" : "exponent exceeds p^m");
            });
        });
    }

    // Units isomorphisms + invariants within a valuation class.
    {
        std::vector<uint32_t> units;
        for (uint32_t u = 2; u < pm && units.size() < 2; ++u)
            if (u % p != 0) units.push_back(u);
        for (uint32_t u : units)
            for (uint32_t lam = 1; lam < pm; ++lam) {
                tasks.push_back([=] {
                    return run_claim(
                        "units-iso", with({{"lambda", u32s(lam)}, {"u", u32s(u)}}),
                        [&] {
                            MorphismReport mr = check_morphism(units_iso(R2, m, lam, u));
                            return pass_fail(mr.valid_isomorphism(), mr.witness);
                        });
                });
            }
        tasks.push_back([=] {
            return run_claim("valuation-class-invariants", pm_params, [&] {
                std::map<uint32_t, std::pair<uint32_t, std::optional<size_t>>> seen;
                for (uint32_t lam = 1; lam < pm; ++lam) {
                    uint32_t v = v_p(p, lam);
                    uint32_t e = exponent(g_lambda(R2, m, lam));
                    std::optional<size_t> h2;
                    try {
                        h2 = cohomology(adjoint_rep(g_lambda(K, m, lam)), 2, budget)
                                 .dim_h;
                    } catch (const BudgetExceeded&) {
                        h2 = std::nullopt;
                    }
                    auto it = seen.find(v);
                    if (it == seen.end()) {
                        seen.emplace(v, std::make_pair(e, h2));
                    } else if (it->second.first != e || it->second.second != h2) {
                        return pass_fail(false, "lambda=" + u32s(lam) +
                                                    " differs within class v=" +
                                                    u32s(v));
                    }
                }
                return pass_fail(true, "exponent and dim H^2(ad) constant per class");
            });
        });
    }

    // Cohomology tables (excluded for (3,2) by the degree-2 budget).
    if (!(p == 3 && m == 2)) {
        for (uint32_t lam = 1; lam < pm; ++lam) {
            tasks.push_back([=] {
                return run_claim("h1-vbar-vanishes", with({{"lambda", u32s(lam)}}),
                                 [&] {
                                     auto V = vbar_rep(g_lambda(K, m, lam), lam);
                                     size_t d = cohomology(V, 1, budget).dim_h;
                                     return pass_fail(d == 0,
                                                      "dim = " + std::to_string(d));
                                 });
            });
            tasks.push_back([=] {
                return run_claim(
                    "h2-adjoint-dim-formula", with({{"lambda", u32s(lam)}}), [&] {
                        auto V = adjoint_rep(g_lambda(K, m, lam));
                        auto probe = wp_class_cochain(V, lam, 1);
                        CohomologyResult res = cohomology(V, 2, budget, probe);
                        size_t expect = v_p(p, lam) + 1 == m ? 1 : 0;
                        std::string w = "computed " + std::to_string(res.dim_h) +
                                        ", formula [v_p(lambda)=m-1] gives " +
                                        std::to_string(expect);
                        if (res.dim_h != expect) return pass_fail(false, w);
                        if (res.dim_h == 1) {
                            bool flagged = false;
                            for (const auto& fl : res.flags)
                                if (fl == "witt-carry-class") flagged = true;
                            if (!flagged)
                                return pass_fail(false,
                                                 w + "; generator not the Witt class");
                            w += "; generator cohomologous to the Witt carry class";
                        }
                        return pass_fail(true, w);
                    });
            });
        }
        tasks.push_back([=] {
            return run_claim("mu-characters-vanish", pm_params, [&] {
                HopfPresentation M = mu_pm(K, m);
                AlgElem oy = add(alg_one(M.A), alg_gen(M.A, 0));
                for (uint32_t j = 0; j < pm; ++j) {
                    Comodule chi =
                        character_rep(M, pow(oy, j), "chi_" + u32s(j));
                    for (uint32_t d = 1; d <= 2; ++d) {
                        size_t dim = cohomology(chi, d, budget).dim_h;
                        if (dim != 0)
                            return pass_fail(false, "dim H^" + u32s(d) + "(chi_" +
                                                        u32s(j) + ") = " +
                                                        std::to_string(dim));
                    }
                }
                return pass_fail(true, "H^1 = H^2 = 0 for all characters");
            });
        });
        tasks.push_back([=] {
            return run_claim("h2-alpha-p-trivial", pm_params, [&] {
                HopfPresentation Ap = alpha_p(K);
                Comodule T = trivial_rep(Ap);
                auto probe = wp_class_cochain(T, 1, 0);
                CohomologyResult res = cohomology(T, 2, budget, probe);
                if (res.dim_h != 1)
                    return pass_fail(false, "dim = " + std::to_string(res.dim_h));
                if (is_coboundary(T, 2, probe, budget))
                    return pass_fail(false, "Witt class is a coboundary");
                bool flagged = false;
                for (const auto& fl : res.flags)
                    if (fl == "witt-carry-class") flagged = true;
                return pass_fail(flagged, "dim = 1, generated by the Witt carry class");
            });
        });
        for (const char* rep_name : {"trivial", "vbar", "adjoint"}) {
            tasks.push_back([=] {
                return run_claim("d-squared-zero", with({{"rep", rep_name}}), [&] {
                    HopfPresentation G = g_lambda(K, m, 1);
                    Comodule V = std::string(rep_name) == "trivial"
                                     ? trivial_rep(G)
                                     : std::string(rep_name) == "vbar"
                                           ? vbar_rep(G, 1)
                                           : adjoint_rep(G);
                    CochainComplex C(V, budget);
                    for (uint32_t n = 0; n <= 1; ++n) {
                        size_t w = C.width(n);
                        for (size_t i = 0; i < w; ++i) {
                            FpVec e(w, 0);
                            e[i] = 1;
                            Cochain f = C.from_coords(n, e);
                            Cochain ddf = C.apply_d(n + 1, C.apply_d(n, f));
                            for (const auto& c : ddf)
                                if (!c.is_zero())
                                    return pass_fail(false,
                                                     "d(d(e_" + std::to_string(i) +
                                                         ")) != 0 in degree " +
                                                         u32s(n));
                        }
                    }
                    return pass_fail(true, "d o d = 0 from degrees 0 and 1");
                });
            });
        }
    }

    // Diagonalizable-invariants cross-check.
    if (p == 2) {
        for (uint32_t lam = 1; lam < pm; ++lam)
            for (const char* rep_name : {"trivial", "vbar", "adjoint"}) {
                tasks.push_back([=] {
                    return run_claim(
                        "diag-invariants-crosscheck",
                        with({{"lambda", u32s(lam)}, {"rep", rep_name}}), [&] {
                            HopfPresentation G = g_lambda(K, m, lam);
                            Comodule V = std::string(rep_name) == "trivial"
                                             ? trivial_rep(G)
                                             : std::string(rep_name) == "vbar"
                                                   ? vbar_rep(G, lam)
                                                   : adjoint_rep(G);
                            for (uint32_t d = 1; d <= 2; ++d) {
                                size_t full = cohomology(V, d, budget).dim_h;
                                size_t restr =
                                    diagonalizable_invariants(G, lam, V, d, budget).dim;
                                if (full != restr)
                                    return pass_fail(
                                        false, "degree " + u32s(d) + ": full " +
                                                   std::to_string(full) +
                                                   " != restricted " +
                                                   std::to_string(restr));
                            }
                            return pass_fail(true, "degrees 1 and 2 agree");
                        });
                });
            }
    }

    // Adjoint matrix shape.
    for (uint32_t lam = 1; lam < pm; ++lam) {
        tasks.push_back([=] {
            return run_claim("adjoint-matrix", with({{"lambda", u32s(lam)}}), [&] {
                HopfPresentation G = g_lambda(K, m, lam);
                Comodule V = adjoint_rep(G);
                AlgElem oy = add(alg_one(G.A), alg_gen(G.A, 1));
                bool ok = V.action[0][0] == pow(oy, lam) &&
                          V.action[0][1] == neg(scalar_mul(K.from_int(lam),
                                                           alg_gen(G.A, 0))) &&
                          V.action[1][0] == alg_zero(G.A) &&
                          V.action[1][1] == alg_one(G.A);
                return pass_fail(ok, "((1+y)^lambda, -lambda x; 0, 1)");
            });
        });
    }

    // Characteristic obstruction (per prime) and Z/p^2 infeasibility.
    if (m == 1) {
        tasks.push_back([=] {
            return run_claim("char-obstruction-invariant",
                             {{"p", u32s(p)}, {"samples", "100"}}, [&] {
                                 std::mt19937 rng(20260825u + p);
                                 DeformationDatum base = trivial_datum(K, 1, 1);
                                 auto monos = base.Ak->basis();
                                 for (int trial = 0; trial < 100; ++trial) {
                                     RawPoly raw;
                                     for (const auto& mo : monos) {
                                         bool constant = true;
                                         for (auto e : mo)
                                             if (e) constant = false;
                                         if (constant) continue;
                                         uint32_t c = rng() % p;
                                         if (c) raw.emplace_back(mo, c);
                                     }
                                     AlgElem f = normal_form(base.Ak, raw);
                                     DeformationDatum D = make_datum(
                                         K, 1, 1, f, alg_zero(base.Ak),
                                         alg_zero(base.Tk2), alg_zero(base.Tk2));
                                     if (char_obstruction(D) != 1)
                                         return pass_fail(false,
                                                          "trial " +
                                                              std::to_string(trial) +
                                                              ": f = " + show(f));
                                 }
                                 return pass_fail(true, "100/100 samples have "
                                                        "obstruction coefficient 1");
                             });
        });
    }
    if (p == 2) {
        tasks.push_back([=] {
            return run_claim("no-axiom-passing-over-zp2",
                             {{"p", u32s(p)}, {"m", u32s(m)}, {"ring", Z.name()}},
                             [&] {
                                 ClassifyResult res = classify(Z, m, 1, budget);
                                 for (const auto& v : res.verdicts)
                                     if (v.axioms_pass)
                                         return pass_fail(false,
                                                          "candidate " + v.label +
                                                              " passes all axioms");
                                 return pass_fail(true,
                                                  std::to_string(res.verdicts.size()) +
                                                      " candidates all fail "
                                                      "well-definedness");
                             });
        });
    }

    // Family structure at the edge.
    if (!(p == 3 && m == 2)) {
        for (uint32_t a = 0; a < p; ++a)
            for (uint32_t a2 = 0; a2 < p; ++a2) {
                tasks.push_back([=] {
                    return run_claim(
                        "family-iso-matrix", with({{"a", u32s(a)}, {"a2", u32s(a2)}}),
                        [&] {
                            HopfPresentation H1 = tilde_h(R2, m, a);
                            HopfPresentation H2 = tilde_h(R2, m, a2);
                            uint32_t lam = int_pow(p, m - 1);
                            IsoReport ir = infinitesimal_iso(H1, H2, lam);
                            bool expect = a == a2;
                            if (ir.found == expect)
                                return pass_fail(true, ir.found ? "isomorphic"
                                                                : "no identity-lifting "
                                                                  "isomorphism");
                            return pass_fail(false,
                                             ir.found
                                                 ? "distinct members are isomorphic"
                                                 : "expected isomorphism not found");
                        });
                });
            }
        tasks.push_back([=] {
            return run_claim("law-difference-classes", pm_params, [&] {
                uint32_t lam = int_pow(p, m - 1);
                HopfPresentation H0 = tilde_h(R2, m, 0);
                std::vector<FpVec> classes;
                for (uint32_t a = 0; a < p; ++a) {
                    LawDifference d =
                        group_law_difference(tilde_h(R2, m, a), H0, lam, budget);
                    if (!d.closed) return pass_fail(false, "difference not closed");
                    classes.push_back(d.class_coords);
                }
                FpVec expect_a(classes[0].size(), 0);
                for (uint32_t a = 0; a < p; ++a) {
                    if (classes[a] != expect_a)
                        return pass_fail(false,
                                         "class of a=" + u32s(a) +
                                             " is not a times the generator class");
                    if (a + 1 < p)
                        expect_a = fp_vec_add(p, expect_a, classes[1]);
                }
                std::set<FpVec> distinct(classes.begin(), classes.end());
                return pass_fail(distinct.size() == p,
                                 std::to_string(distinct.size()) +
                                     " distinct classes out of " + u32s(p));
            });
        });
    }

    // Quotients, conjugation, mu-rigidity.
    for (uint32_t lam = 1; lam < pm; ++lam) {
        tasks.push_back([=] {
            return run_claim("quotient-mu", with({{"lambda", u32s(lam)}}), [&] {
                HopfPresentation G = g_lambda(R2, m, lam);
                QuotientResult Q = quotient_subalgebra(G, {1});
                if (!(Q.closed_under_mul && Q.comul_stable && Q.monogenic))
                    return pass_fail(false, Q.note);
                HopfPresentation M = mu_pm(R2, m);
                HopfMorphism phi{M, *Q.induced, {alg_gen(Q.induced->A, 0)}};
                if (!check_morphism(phi).valid_isomorphism())
                    return pass_fail(false, "induced quotient is not mu_{p^m}");
                std::vector<AlgElem> xp;
                for (uint32_t i = 0; i < p; ++i) xp.push_back(pow(alg_gen(G.A, 0), i));
                FreenessReport fr = free_over(G.A, Q.basis, xp);
                return pass_fail(fr.free, "B = O(mu), A free of rank p over B");
            });
        });
        tasks.push_back([=] {
            return run_claim("conjugation-factors:G_lambda",
                             with({{"lambda", u32s(lam)}}), [&] {
                                 HopfPresentation G = g_lambda(R2, m, lam);
                                 ConjugationReport c =
                                     conjugation_factors_through(G, {0});
                                 return pass_fail(c.n_is_subgroup && c.factors,
                                                  c.witness);
                             });
        });
    }
    for (uint32_t a = 0; a < p; ++a) {
        tasks.push_back([=] {
            return run_claim("conjugation-factors:H_tilde", with({{"a", u32s(a)}}),
                             [&] {
                                 HopfPresentation H = tilde_h(R2, m, a);
                                 ConjugationReport c =
                                     conjugation_factors_through(H, {0});
                                 return pass_fail(c.n_is_subgroup && c.factors,
                                                  c.witness);
                             });
        });
    }
    if (p == 2) {
        tasks.push_back([=] {
            return run_claim("mu-rigidity", pm_params, [&] {
                MuRigidityReport r = mu_rigidity_check(K, m);
                return pass_fail(r.rigid,
                                 "closed twists " + std::to_string(r.closed_dim) +
                                     ", coboundaries " +
                                     std::to_string(r.coboundary_dim));
            });
        });
    }

    // Classification verdicts.
    for (uint32_t lam = 1; lam < pm; ++lam) {
        tasks.push_back([=] {
            return run_claim("classification", with({{"lambda", u32s(lam)}}), [&] {
                ClassifyResult res = classify(R2, m, lam, budget);
                std::string w;
                for (const auto& v : res.verdicts) {
                    if (!w.empty()) w += " | ";
                    w += v.label + ": " +
                         (v.matches_prediction ? "as predicted" : v.deviation);
                }
                bool ok = res.deviations.empty();
                return pass_fail(ok, w);
            });
        });
    }
}

int cmd_report(uint64_t budget, unsigned jobs, const std::string& json_path,
               const std::vector<std::string>& grid_arg) {
    std::vector<std::pair<uint32_t, uint32_t>> grid;
    if (grid_arg.empty()) {
        grid = {{2, 1}, {2, 2}, {3, 1}};
    } else {
        for (const auto& s : grid_arg) {
            unsigned gp = 0, gm = 0;
            if (std::sscanf(s.c_str(), "%u,%u", &gp, &gm) != 2 || gp < 2 || gm < 1)
                throw CLI::ValidationError("--grid entries look like 'p,m'");
            grid.emplace_back(gp, gm);
        }
    }
    std::vector<Task> tasks;
    std::string digest_src = "reproduce/";
    for (auto [p, m] : grid) {
        grid_tasks(p, m, budget, tasks);
        digest_src += "(" + u32s(p) + "," + u32s(m) + ")";
    }
    digest_src += "/budget=" + std::to_string(budget);

    Report rep;
    rep.input_digest = report::digest_hex(digest_src);
    rep.claims.resize(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) rep.claims[i] = tasks[i]();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                rep.claims[i] = tasks[i]();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return finish(rep, json_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hopf-algebra models of finite flat group schemes"};
    app.require_subcommand(1);

    uint64_t budget = kDefaultBudget;
    if (const char* env = std::getenv("FFGS_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') budget = v;
    }
    // A zero budget means: skip every claim that needs a coboundary matrix.
    auto eff = [&budget] { return budget == 0 ? uint64_t{1} : budget; };

    GroupOpts opts;
    std::string json_path;
    uint32_t n = 1, degree = 2;
    std::string rep_name = "adjoint";
    unsigned jobs = 1;
    std::vector<std::string> grid_arg;

    auto add_group_flags = [&](CLI::App* sub, bool with_ring = true) {
        sub->add_option("--input", opts.input, "read the group from a .ffgs file");
        sub->add_option("--p", opts.p, "prime p");
        sub->add_option("--m", opts.m, "mu_{p^m} exponent m");
        sub->add_option("--lambda", opts.lambda, "twist exponent lambda");
        sub->add_option("--a", opts.a, "deformation family parameter a");
        if (with_ring)
            sub->add_option("--ring", opts.ring, "base ring: fp, fp-pi2, zmod-p2");
        sub->add_option("--json", json_path, "write the JSON report here");
        sub->add_option("--budget", budget, "matrix cell budget");
    };

    int exit_code = 0;
    auto* verify = app.add_subcommand("verify", "check the Hopf axioms");
    add_group_flags(verify);
    verify->callback([&] { exit_code = cmd_verify(opts, json_path); });

    auto* mul = app.add_subcommand("mul-by-n", "multiplication-by-n images");
    add_group_flags(mul);
    mul->add_option("--n", n, "the multiplier n")->required();
    mul->callback([&] { exit_code = cmd_mul_by_n(opts, n, json_path); });

    auto* killed = app.add_subcommand("killed-by", "does [n] kill the group?");
    add_group_flags(killed);
    killed->add_option("--n", n, "the multiplier n")->required();
    killed->callback([&] { exit_code = cmd_killed_by(opts, n, json_path); });

    auto* expo = app.add_subcommand("exponent", "least h with [p^h] trivial");
    add_group_flags(expo);
    expo->callback([&] { exit_code = cmd_exponent(opts, json_path); });

    auto* coh = app.add_subcommand("cohomology", "comodule cohomology dimensions");
    add_group_flags(coh);
    coh->add_option("--rep", rep_name, "comodule: trivial, vbar, adjoint, or declared");
    coh->add_option("--degree", degree, "cohomological degree");
    coh->callback(
        [&] { exit_code = cmd_cohomology(opts, rep_name, degree, eff(), json_path); });

    auto* adj = app.add_subcommand("adjoint", "adjoint representation matrix");
    add_group_flags(adj);
    adj->callback([&] { exit_code = cmd_adjoint(opts, json_path); });

    auto* quot = app.add_subcommand("quotient", "mu-quotient and freeness");
    add_group_flags(quot);
    quot->callback([&] { exit_code = cmd_quotient(opts, json_path); });

    auto* cls = app.add_subcommand("classify", "enumerate deformation candidates");
    add_group_flags(cls);
    cls->callback([&] { exit_code = cmd_classify(opts, eff(), json_path); });

    auto* rpt = app.add_subcommand("report", "run the full claim grid");
    rpt->add_option("--grid", grid_arg, "grid points 'p,m' (default 2,1 2,2 3,1)");
    rpt->add_option("--json", json_path, "write the JSON report here");
    rpt->add_option("--budget", budget, "matrix cell budget");
    rpt->add_option("--jobs", jobs, "parallel claim execution");
    rpt->callback([&] { exit_code = cmd_report(eff(), jobs, json_path, grid_arg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const dsl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
