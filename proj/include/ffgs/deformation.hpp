#pragma once

// Infinitesimal deformations of G_lambda over length-2 Artin bases: a datum
// twists the relations (x^p = pi f, y^{p^m} = pi g) and the group law
// (Delta x += pi h1, Delta y += pi h2), all twists living over the residue
// field. The module provides assembly, the closure/characteristic
// obstructions, the law<->cochain dictionary, conjugation and quotient
// checks, identity-lifting isomorphism search, and the classification driver.

#include "ffgs/catalog.hpp"
#include "ffgs/cohomology.hpp"

namespace ffgs {

struct DeformationDatum {
    uint32_t m = 1;
    uint32_t lambda = 1;
    AlgebraPtr Ak;  // residue model k[x,y]/(x^p, y^{p^m})
    AlgebraPtr Tk2; // Ak (x) Ak
    AlgElem f, g;   // relation twists
    AlgElem h1, h2; // law twists
    std::string label;
};

// Validates the normalization h_i(x,y,0,0) = h_i(0,0,x',y') = 0 and
// f(0,0) = g(0,0) = 0 (counit well-definedness).
DeformationDatum make_datum(const BaseRing& K, uint32_t m, uint32_t lambda,
                            const AlgElem& f, const AlgElem& g, const AlgElem& h1,
                            const AlgElem& h2, std::string label = "");
DeformationDatum trivial_datum(const BaseRing& K, uint32_t m, uint32_t lambda);
// Law twists of the catalog family member a (the shape tilde_h uses), over
// the residue model of the datum grid point.
std::pair<AlgElem, AlgElem> family_twists(const AlgebraPtr& Tk2, uint32_t p,
                                          uint32_t m, uint32_t lambda, uint32_t a);

// The deformed presentation over R (any length-2 base; over Z/p^2 the
// characteristic obstruction makes check_axioms fail even for the trivial
// datum, which is the expected outcome there).
HopfPresentation assemble(const BaseRing& R, const DeformationDatum& D);

// Well-definedness defects of the twisted relations in the residue model:
//   r1 = f(law) - f (x) 1 - (1+y)^{lambda p} (1 (x) f)
//   r2 = g(law) - g (x) 1 - 1 (x) g
// Componentwise the negated vbar-comodule d^1 of the 1-cochain (f,g).
std::pair<AlgElem, AlgElem> closure_residuals(const DeformationDatum& D);

// Coefficient of x^{p-1} (x) x in W_p(x (x) 1, (1+y)^lambda (x) x) minus the
// f-reachable residual; the invariant 1 is what obstructs every lift of the
// relation twist to Z/p^2.
uint32_t char_obstruction(const DeformationDatum& D);

// Law coboundary of the 1-cochain (u,v), u,v in the residue model:
//   delta1 = Delta0(u) - u (x) 1 - (1+y)^lambda (1 (x) u)
//            - lambda ((1+y)^{lambda-1} v) (x) x
//   delta2 = Delta0(v) - v (x) (1+y) - (1+y)(1 (x) v)
std::pair<AlgElem, AlgElem> law_coboundary(const DeformationDatum& D,
                                           const AlgElem& u, const AlgElem& v);

// Right-translation dictionary from law twists to an adjoint-complex
// 2-cochain:
//   z2 = Delta(1+y)^{-1} h2,  z1 = h1 - lambda Delta(x) z2.
Cochain extract_cocycle(const Comodule& Vad, uint32_t lambda, const AlgElem& h1,
                        const AlgElem& h2);

struct LawDifference {
    AlgElem d1, d2;     // pi-coefficients of Delta_1 - Delta_2, residue T2
    Cochain z;          // adjoint-complex 2-cochain via the dictionary
    bool closed = false;
    FpVec class_coords; // canonical reduction modulo coboundaries
    bool coboundary = false;
};

// Difference of two group laws on the same algebra, as an adjoint 2-cocycle
// with its canonical class.
LawDifference group_law_difference(const HopfPresentation& G1,
                                   const HopfPresentation& G2, uint32_t lambda,
                                   uint64_t budget = kDefaultBudget);

struct ConjugationReport {
    bool n_is_subgroup = false;
    bool factors = false;
    std::string witness;
};

// N is the closed subgroup keeping the listed generators (the others are set
// to 0). Checks N is a subgroup presentation and that conjugation of the
// universal N-point by the universal G-point stays inside N.
ConjugationReport conjugation_factors_through(const HopfPresentation& G,
                                              const std::vector<size_t>& n_gens);

struct IsoReport {
    bool relations_compatible = false;
    bool found = false;
    std::optional<HopfMorphism> iso;
    std::string witness;
};

// Identity-lifting isomorphism phi(gen) = gen + pi*(residue correction),
// solved as an affine-linear system over k and re-verified over R.
IsoReport infinitesimal_iso(const HopfPresentation& G1, const HopfPresentation& G2,
                            uint32_t lambda);

struct MuRigidityReport {
    size_t closed_dim = 0;
    size_t coboundary_dim = 0;
    bool rigid = false;
};

// Every normalized closed mu-law twist is a coboundary
// delta_mu(v) = Delta0(v) - v (x) (1+y) - (1+y)(1 (x) v).
MuRigidityReport mu_rigidity_check(const BaseRing& K, uint32_t m);

struct CandidateVerdict {
    std::string label;
    uint32_t c = 0;             // algebra-twist coefficient, f = c y^{p^{v+1}}
    uint32_t a = 0;             // law-twist coefficient
    std::string law_shape;      // "none" | "family" | "display"
    bool axioms_pass = false;
    bool killed_by_order = false;
    std::optional<uint32_t> exp;
    bool quotient_monogenic = false;
    bool free_rank_p = false;
    bool conj_factors = false;
    std::optional<uint32_t> iso_to_family_a;
    bool matches_prediction = true;
    std::string deviation;      // machine-readable "code: detail", empty if none
};

struct ClassifyResult {
    uint32_t p = 2, m = 1, lambda = 1, valuation = 0;
    std::string base_name;
    std::optional<size_t> h2_dim; // adjoint degree-2 dimension; nullopt when
                                  // the budget excludes the computation
    std::vector<CandidateVerdict> verdicts;
    std::vector<std::string> deviations;
};

// Enumerate deformation candidates at (p, m, lambda) over R (length 2),
// verify each against the expected classification, and record every
// deviation; deviations are reported, never suppressed.
ClassifyResult classify(const BaseRing& R, uint32_t m, uint32_t lambda,
                        uint64_t budget = kDefaultBudget);

} // namespace ffgs
