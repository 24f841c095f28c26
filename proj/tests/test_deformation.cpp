#include "ffgs/deformation.hpp"

#include <doctest.h>

#include <random>

using namespace ffgs;

namespace {

AlgElem random_normalized(const std::shared_ptr<const AlgebraPresentation>& A,
                          std::mt19937& rng) {
    RawPoly raw;
    for (const auto& mono : A->basis()) {
        bool constant = true;
        for (auto e : mono)
            if (e) constant = false;
        if (constant) continue;
        uint32_t c = rng() % A->base().p();
        if (c) raw.emplace_back(mono, c);
    }
    return normal_form(A, raw);
}

} // namespace

TEST_CASE("closure residuals are minus the line-bundle coboundary") {
    std::mt19937 rng(42);
    for (auto [p, m, lam] : std::vector<std::array<uint32_t, 3>>{
             {2, 1, 1}, {2, 2, 2}, {3, 1, 1}}) {
        BaseRing K = BaseRing::fp(p);
        DeformationDatum base = trivial_datum(K, m, lam);
        Comodule V = vbar_rep(g_lambda(K, m, lam), lam);
        CochainComplex C(V, kDefaultBudget);
        for (int trial = 0; trial < 5; ++trial) {
            AlgElem f = random_normalized(base.Ak, rng);
            AlgElem g = random_normalized(base.Ak, rng);
            DeformationDatum D = make_datum(K, m, lam, f, g, alg_zero(base.Tk2),
                                            alg_zero(base.Tk2));
            auto [r1, r2] = closure_residuals(D);
            Cochain df = C.apply_d(1, {f, g});
            CAPTURE(p);
            CAPTURE(m);
            CAPTURE(lam);
            CHECK(r1 == neg(df[0]));
            CHECK(r2 == neg(df[1]));
        }
    }
}

TEST_CASE("the characteristic obstruction coefficient is always one") {
    std::mt19937 rng(20260825);
    for (uint32_t p : {2u, 3u}) {
        BaseRing K = BaseRing::fp(p);
        DeformationDatum base = trivial_datum(K, 1, 1);
        for (int trial = 0; trial < 100; ++trial) {
            AlgElem f = random_normalized(base.Ak, rng);
            DeformationDatum D = make_datum(K, 1, 1, f, alg_zero(base.Ak),
                                            alg_zero(base.Tk2), alg_zero(base.Tk2));
            CAPTURE(p);
            CAPTURE(trial);
            CHECK(char_obstruction(D) == 1);
        }
    }
}

TEST_CASE("family law twists at m = 1 are coboundaries of a coordinate shear") {
    // With u = 0, v = -a x the law coboundary reproduces the family twist,
    // which is why all m = 1 members are isomorphic.
    uint32_t p = 3, m = 1, lam = 2, a = 2;
    BaseRing K = BaseRing::fp(p);
    DeformationDatum base = trivial_datum(K, m, lam);
    auto twists = family_twists(base.Tk2, p, m, lam, a);
    AlgElem u = alg_zero(base.Ak);
    AlgElem v = neg(scalar_mul(K.from_int(a), alg_gen(base.Ak, 0)));
    auto [d1, d2] = law_coboundary(base, u, v);
    CHECK(twists.first == d1);
    CHECK(twists.second == d2);
}

TEST_CASE("family law twists at m >= 2 are closed but not coboundaries") {
    BaseRing R = BaseRing::fp_pi(2);
    LawDifference d = group_law_difference(tilde_h(R, 2, 1), tilde_h(R, 2, 0), 2);
    CHECK(d.closed);
    CHECK(!d.coboundary);
    bool nonzero = false;
    for (auto c : d.class_coords)
        if (c) nonzero = true;
    CHECK(nonzero);
}

TEST_CASE("the trivial difference has trivial class") {
    BaseRing R = BaseRing::fp_pi(2);
    LawDifference d = group_law_difference(tilde_h(R, 2, 0), tilde_h(R, 2, 0), 2);
    CHECK(d.closed);
    CHECK(d.coboundary);
}

TEST_CASE("assembled family members satisfy the axioms over the dual numbers") {
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {2, 2}, {3, 1}}) {
        BaseRing R = BaseRing::fp_pi(p);
        BaseRing K = BaseRing::fp(p);
        uint32_t lam = int_pow(p, m - 1);
        DeformationDatum base = trivial_datum(K, m, lam);
        for (uint32_t a = 0; a < p; ++a) {
            auto [h1, h2] = family_twists(base.Tk2, p, m, lam, a);
            DeformationDatum D = make_datum(K, m, lam, alg_zero(base.Ak),
                                            alg_zero(base.Ak), h1, h2, "family");
            HopfPresentation H = assemble(R, D);
            CAPTURE(p);
            CAPTURE(m);
            CAPTURE(a);
            CHECK(check_axioms(H).all_pass());
            CHECK(is_killed_by(H, int_pow(p, m + 1)));
        }
    }
}

TEST_CASE("conjugation factors through the kernel for the split groups") {
    BaseRing R = BaseRing::fp_pi(2);
    for (uint32_t m : {1u, 2u}) {
        for (uint32_t lam = 1; lam < int_pow(2, m); ++lam) {
            ConjugationReport c =
                conjugation_factors_through(g_lambda(R, m, lam), {0});
            CAPTURE(m);
            CAPTURE(lam);
            CHECK(c.n_is_subgroup);
            CHECK(c.factors);
        }
    }
}

TEST_CASE("conjugation factors for deformed members only when m >= 2") {
    BaseRing R = BaseRing::fp_pi(2);
    ConjugationReport good = conjugation_factors_through(tilde_h(R, 2, 1), {0});
    CHECK(good.n_is_subgroup);
    CHECK(good.factors);
    ConjugationReport bad = conjugation_factors_through(tilde_h(R, 1, 1), {0});
    CHECK(bad.n_is_subgroup);
    CHECK(!bad.factors);
    CHECK(bad.witness.find("y") != std::string::npos);
}

TEST_CASE("all m = 1 family members collapse to a single isomorphism class") {
    for (uint32_t p : {2u, 3u}) {
        BaseRing R = BaseRing::fp_pi(p);
        for (uint32_t a = 0; a < p; ++a)
            for (uint32_t a2 = 0; a2 < p; ++a2) {
                IsoReport ir = infinitesimal_iso(tilde_h(R, 1, a), tilde_h(R, 1, a2), 1);
                CAPTURE(p);
                CAPTURE(a);
                CAPTURE(a2);
                CHECK(ir.relations_compatible);
                CHECK(ir.found);
                REQUIRE(ir.iso.has_value());
                CHECK(check_morphism(*ir.iso).valid_isomorphism());
            }
    }
}

TEST_CASE("distinct m = 2 family members are not isomorphic over the identity") {
    BaseRing R = BaseRing::fp_pi(2);
    IsoReport same = infinitesimal_iso(tilde_h(R, 2, 1), tilde_h(R, 2, 1), 2);
    CHECK(same.found);
    IsoReport diff = infinitesimal_iso(tilde_h(R, 2, 1), tilde_h(R, 2, 0), 2);
    CHECK(diff.relations_compatible);
    CHECK(!diff.found);
}

TEST_CASE("the multiplicative quotient admits no infinitesimal law twists") {
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {2, 2}, {3, 1}}) {
        BaseRing K = BaseRing::fp(p);
        MuRigidityReport r = mu_rigidity_check(K, m);
        CAPTURE(p);
        CAPTURE(m);
        CHECK(r.closed_dim == r.coboundary_dim);
        CHECK(r.rigid);
    }
}

TEST_CASE("classification at the edge finds the one-parameter family") {
    BaseRing R = BaseRing::fp_pi(2);
    ClassifyResult res = classify(R, 2, 2);
    REQUIRE(res.h2_dim.has_value());
    CHECK(*res.h2_dim == 1);
    CHECK(res.valuation == 1);
    size_t family = 0, display = 0;
    for (const auto& v : res.verdicts) {
        if (v.law_shape == "family") {
            ++family;
            CHECK(v.axioms_pass);
            CHECK(v.matches_prediction);
        }
        if (v.law_shape == "display") {
            ++display;
            CHECK(!v.axioms_pass);
            CHECK(v.deviation.find("law-display-not-closed") != std::string::npos);
        }
    }
    CHECK(family == 1); // a = 1 for p = 2 (a = 0 is the base point)
    CHECK(display == 1);
    CHECK(res.deviations.size() == 1);
}

TEST_CASE("classification off the edge reports the surviving algebra twist") {
    BaseRing R = BaseRing::fp_pi(2);
    ClassifyResult res = classify(R, 2, 1);
    REQUIRE(res.h2_dim.has_value());
    CHECK(*res.h2_dim == 0);
    bool survivor = false;
    for (const auto& v : res.verdicts)
        if (v.deviation.find("algebra-twist-survives") != std::string::npos)
            survivor = true;
    CHECK(survivor);
}

TEST_CASE("classification at m = 1 reports the family collapse") {
    BaseRing R = BaseRing::fp_pi(3);
    ClassifyResult res = classify(R, 1, 1);
    size_t collapses = 0;
    for (const auto& v : res.verdicts)
        if (v.deviation.find("family-collapse") != std::string::npos) ++collapses;
    CHECK(collapses == 2); // a = 1 and a = 2 both fold into a = 0
}

TEST_CASE("no candidate survives over Z/p^2") {
    for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {2, 2}}) {
        BaseRing Z = BaseRing::zmod(p, 2);
        ClassifyResult res = classify(Z, m, int_pow(p, m - 1));
        CAPTURE(p);
        CAPTURE(m);
        CHECK(!res.verdicts.empty());
        size_t obstructed = 0;
        for (const auto& v : res.verdicts) {
            CHECK(!v.axioms_pass);
            // Display-law candidates keep their own diagnosis; the rest name
            // the characteristic obstruction explicitly.
            if (v.law_shape != "display") {
                CHECK(v.deviation.find("char-p2-obstruction") != std::string::npos);
                ++obstructed;
            }
        }
        CHECK(obstructed >= 1);
    }
}

TEST_CASE("datum validation rejects unnormalized twists") {
    BaseRing K = BaseRing::fp(2);
    DeformationDatum base = trivial_datum(K, 1, 1);
    // A twist with nonzero constant term cannot preserve the unit.
    AlgElem bad = alg_one(base.Ak);
    CHECK_THROWS((void)make_datum(K, 1, 1, bad, alg_zero(base.Ak),
                                  alg_zero(base.Tk2), alg_zero(base.Tk2)));
    // A law twist must vanish when either argument is the identity.
    AlgElem h = alg_gen(base.Tk2, 0); // x@1 alone
    CHECK_THROWS((void)make_datum(K, 1, 1, alg_zero(base.Ak), alg_zero(base.Ak), h,
                                  alg_zero(base.Tk2)));
}

TEST_CASE("the extracted cocycle of the family difference is the Witt class") {
    BaseRing R = BaseRing::fp_pi(2);
    BaseRing K = BaseRing::fp(2);
    LawDifference d = group_law_difference(tilde_h(R, 2, 1), g_lambda(R, 2, 2), 2);
    REQUIRE(d.closed);
    Comodule V = adjoint_rep(g_lambda(K, 2, 2));
    Cochain W = wp_class_cochain(V, 2, 1);
    // The difference class and the Witt class agree up to coboundary.
    Cochain diff{sub(d.z[0], W[0]), sub(d.z[1], W[1])};
    CHECK(is_cocycle(V, 2, diff));
    CHECK(is_coboundary(V, 2, diff).has_value());
}
