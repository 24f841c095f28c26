#include "ffgs/catalog.hpp"
#include "ffgs/hopf.hpp"

#include <doctest.h>

using namespace ffgs;

TEST_CASE("axioms pass for the basic building blocks") {
    BaseRing R = BaseRing::fp_pi(2);
    for (const HopfPresentation& G :
         {alpha_p(R), mu_pm(R, 2), g_lambda(R, 2, 2), tilde_h(R, 2, 1)}) {
        AxiomReport rep = check_axioms(G);
        CAPTURE(rep.witness);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("a corrupted comultiplication is rejected with a witness") {
    BaseRing R = BaseRing::fp_pi(2);
    HopfPresentation G = g_lambda(R, 1, 1);
    // Drop the twist term from comul x: counit still fine, coassociativity breaks.
    auto bad_comul = G.comul;
    bad_comul[0] = add(alg_gen(G.T2, 0), alg_gen(G.T2, 2)); // x@1 + x@2
    HopfPresentation bad = make_hopf(G.A, bad_comul, G.counit, G.antipode);
    AxiomReport rep = check_axioms(bad);
    CHECK(!rep.all_pass());
    CHECK(!rep.witness.empty());
}

TEST_CASE("the antipode can be recovered from scratch") {
    BaseRing R = BaseRing::fp_pi(2);
    HopfPresentation M = mu_pm(R, 2);
    HopfPresentation no_s = make_hopf(M.A, M.comul, M.counit);
    REQUIRE(!no_s.antipode.has_value());
    std::vector<AlgElem> images = solve_antipode(no_s);
    REQUIRE(images.size() == 1);
    // S(y) = (1+y)^{-1} - 1.
    AlgElem oy = add(alg_one(M.A), alg_gen(M.A, 0));
    CHECK(images[0] == sub(inv(oy), alg_one(M.A)));
    HopfPresentation solved = make_hopf(M.A, M.comul, M.counit, images);
    CHECK(check_axioms(solved).all_pass());
}

TEST_CASE("multiplication by n agrees along both evaluation routes") {
    BaseRing R = BaseRing::fp_pi(3);
    HopfPresentation G = g_lambda(R, 1, 2);
    for (uint32_t n = 0; n <= 9; ++n) {
        CAPTURE(n);
        CHECK(mult_by_n(G, n) == mult_by_n_convolution(G, n));
    }
}

TEST_CASE("exponents of the catalog groups") {
    BaseRing R = BaseRing::fp_pi(2);
    CHECK(exponent(alpha_p(R)) == 1);
    CHECK(exponent(mu_pm(R, 2)) == 2);
    // v_p(lambda) = 0 forces the extra factor of p.
    CHECK(exponent(g_lambda(R, 1, 1)) == 2);
    CHECK(exponent(g_lambda(R, 2, 1)) == 3);
    CHECK(exponent(g_lambda(R, 2, 2)) == 2);
    CHECK(is_killed_by(g_lambda(R, 2, 2), 4));
    CHECK(!is_killed_by(g_lambda(R, 2, 1), 4));
    CHECK(is_killed_by(g_lambda(R, 2, 1), 8));
}

TEST_CASE("morphism checking accepts the identity and rejects a unit scaling") {
    BaseRing R = BaseRing::fp_pi(3);
    HopfPresentation G = g_lambda(R, 1, 1);
    HopfMorphism id{G, G, {alg_gen(G.A, 0), alg_gen(G.A, 1)}};
    CHECK(check_morphism(id).valid_isomorphism());
    // y -> 2y respects the algebra relations but not the group law:
    // Delta(2y) has cross term 2 y(x)y while (phi(x)phi) produces 4 y(x)y.
    HopfMorphism scale{G, G,
                       {alg_gen(G.A, 0), scalar_mul(R.from_int(2), alg_gen(G.A, 1))}};
    MorphismReport rep = check_morphism(scale);
    CHECK(rep.respects_relations);
    CHECK(!rep.valid_morphism());
}

TEST_CASE("quotient by the mu coordinate is a monogenic Hopf quotient") {
    BaseRing R = BaseRing::fp_pi(2);
    HopfPresentation G = g_lambda(R, 2, 2);
    QuotientResult Q = quotient_subalgebra(G, {1});
    CHECK(Q.closed_under_mul);
    CHECK(Q.comul_stable);
    CHECK(Q.monogenic);
    REQUIRE(Q.induced.has_value());
    HopfPresentation M = mu_pm(R, 2);
    HopfMorphism phi{M, *Q.induced, {alg_gen(Q.induced->A, 0)}};
    CHECK(check_morphism(phi).valid_isomorphism());
}

TEST_CASE("the x subalgebra is not comultiplication stable") {
    BaseRing R = BaseRing::fp_pi(2);
    HopfPresentation G = g_lambda(R, 2, 2);
    QuotientResult Q = quotient_subalgebra(G, {0});
    CHECK(!Q.comul_stable);
}

TEST_CASE("freeness over the mu coordinate ring with basis 1, x, ..., x^{p-1}") {
    BaseRing R = BaseRing::fp_pi(3);
    HopfPresentation G = g_lambda(R, 1, 2);
    QuotientResult Q = quotient_subalgebra(G, {1});
    REQUIRE(Q.monogenic);
    std::vector<AlgElem> xs;
    for (uint32_t i = 0; i < 3; ++i) xs.push_back(pow(alg_gen(G.A, 0), i));
    FreenessReport fr = free_over(G.A, Q.basis, xs);
    CHECK(fr.free);
    CHECK(fr.rank == 3);
    // Dropping a module generator breaks spanning.
    FreenessReport partial = free_over(G.A, Q.basis, {xs[0], xs[1]});
    CHECK(!partial.free);
}

TEST_CASE("killed-by respects the counit criterion") {
    BaseRing R = BaseRing::fp_pi(2);
    HopfPresentation A2 = alpha_p(R);
    CHECK(is_killed_by(A2, 2));
    CHECK(!is_killed_by(A2, 1)); // [1] is the identity, not the counit section
    CHECK(is_killed_by(A2, 4));  // multiples of the exponent still kill
}

TEST_CASE("comultiplication application lands in the tensor square") {
    BaseRing R = BaseRing::fp_pi(2);
    HopfPresentation G = g_lambda(R, 1, 1);
    AlgElem dx = apply_comul(G, alg_gen(G.A, 0));
    // Delta x = x (x) 1 + (1+y) (x) x.
    AlgElem x1 = alg_gen(G.T2, 0), y1 = alg_gen(G.T2, 1), x2 = alg_gen(G.T2, 2);
    CHECK(dx == add(x1, add(x2, mul(y1, x2))));
    // Delta is an algebra map.
    AlgElem xy = mul(alg_gen(G.A, 0), alg_gen(G.A, 1));
    CHECK(apply_comul(G, xy) ==
          mul(apply_comul(G, alg_gen(G.A, 0)), apply_comul(G, alg_gen(G.A, 1))));
}
