#ifndef FFGS_HOPF_HPP
#define FFGS_HOPF_HPP

#include "ffgs/algebra.hpp"
#include "ffgs/fp_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ffgs {

// A Hopf-algebra presentation: comultiplication images in A (x) A per
// generator, counit scalars per generator, optional antipode images in A.
// This is the artifact's model of a finite flat group scheme Spec(A).
struct HopfPresentation {
    AlgebraPtr A;
    AlgebraPtr T2; // A (x) A with slot-tagged generators
    std::vector<AlgElem> comul;   // in T2
    std::vector<uint32_t> counit; // BaseRing elements
    std::optional<std::vector<AlgElem>> antipode; // in A

    uint64_t order() const { return A->dimension(); }
    const BaseRing& base() const { return A->base(); }
};

HopfPresentation make_hopf(AlgebraPtr A, std::vector<AlgElem> comul,
                           std::vector<uint32_t> counit,
                           std::optional<std::vector<AlgElem>> antipode = std::nullopt);

struct AxiomReport {
    bool well_defined_comul = false;
    bool well_defined_counit = false;
    bool well_defined_antipode = false; // true when no antipode present
    bool coassociative = false;
    bool counit_left = false;
    bool counit_right = false;
    bool antipode_left = false;  // true when no antipode present
    bool antipode_right = false; // ditto
    bool has_antipode = false;
    std::string witness; // first failing identity, empty when all pass

    bool all_pass() const {
        return well_defined_comul && well_defined_counit && well_defined_antipode &&
               coassociative && counit_left && counit_right && antipode_left &&
               antipode_right;
    }
};

struct HopfMorphism {
    HopfPresentation source;
    HopfPresentation target;
    std::vector<AlgElem> images; // in target.A, one per source generator
};

struct MorphismReport {
    bool respects_relations = false;
    bool respects_comul = false;
    bool respects_counit = false;
    bool invertible = false;
    std::string witness;

    bool valid_morphism() const {
        return respects_relations && respects_comul && respects_counit;
    }
    bool valid_isomorphism() const { return valid_morphism() && invertible; }
};

// --- core maps ------------------------------------------------------------

// Delta applied to an element of A, landing in T2.
AlgElem apply_comul(const HopfPresentation& G, const AlgElem& e);
// Delta applied to tensor slot `s` (1-based) of an element of A^(x)k,
// landing in A^(x)(k+1). Tk and Tk1 are the tensor powers.
AlgElem apply_comul_slot(const HopfPresentation& G, const AlgebraPtr& Tk,
                         const AlgebraPtr& Tk1, uint32_t k, uint32_t s,
                         const AlgElem& e);
// Counit extended to an algebra map A -> R.
uint32_t counit_eval(const HopfPresentation& G, const AlgElem& e);
// Embed an element of A into tensor slot s (1-based) of T^k = A^(x)k.
AlgElem embed_in_slot(const AlgebraPtr& A, const AlgebraPtr& Tk, uint32_t s,
                      const AlgElem& e);

// --- operations -----------------------------------------------------------

AxiomReport check_axioms(const HopfPresentation& G);

// Solve m(S (x) id)Delta = unit.counit along the augmentation filtration;
// returns verified antipode images or throws when no solution exists.
std::vector<AlgElem> solve_antipode(const HopfPresentation& G);

// [n] by the left-fold recursion [n+1] = m([n] (x) id)Delta.
std::vector<AlgElem> mult_by_n(const HopfPresentation& G, uint32_t n);
// [n] as an n-fold convolution power of the identity, computed by binary
// convolution squaring; an independent code path cross-checking mult_by_n.
std::vector<AlgElem> mult_by_n_convolution(const HopfPresentation& G, uint32_t n);
// Convolution product of two endomorphism image lists.
std::vector<AlgElem> convolution(const HopfPresentation& G,
                                 const std::vector<AlgElem>& f,
                                 const std::vector<AlgElem>& g);

// True iff [n](gen) = counit(gen)*1 for every generator (I in Ker [n]).
bool is_killed_by(const HopfPresentation& G, uint32_t n);
// Least h with is_killed_by(G, p^h).
uint32_t exponent(const HopfPresentation& G);

MorphismReport check_morphism(const HopfMorphism& phi);

// --- quotients ------------------------------------------------------------

struct QuotientResult {
    std::vector<AlgElem> basis;        // R-module generators of B inside A
    bool closed_under_mul = false;
    bool comul_stable = false;         // Delta(B) within span(B (x) B)
    bool monogenic = false;            // B generated by a single eta
    std::optional<AlgElem> eta;        // chosen generator when monogenic
    std::optional<HopfPresentation> induced; // presentation R[t]/(t^d - tail)
    std::string note;
};

// B = { a in A : Delta(a) - 1(x)a in J (x) A } for J generated by the given
// generator subset; `mirrored` uses A (x) J instead. The linear solve runs on
// the k-realification, so the base must be F_p-linear (FpPi).
QuotientResult quotient_subalgebra(const HopfPresentation& G,
                                   const std::vector<size_t>& j_gens,
                                   bool mirrored = false);

struct FreenessReport {
    bool free = false;
    size_t dim_k = 0;          // k-dimension of the span
    size_t dim_k_mod_m = 0;    // k-dimension of the reduction mod m
    size_t rank = 0;           // = dim_k_mod_m; the free rank when free
};

// Over an Artin local base of length l: a finitely generated submodule is
// free iff l * dim_k(B/mB) = dim_k(B).
FreenessReport is_free_module(const AlgebraPtr& A, const std::vector<AlgElem>& spanning);

// A as a module over the subalgebra spanned by b_basis: free with basis
// module_gens iff the products m_g * b span all of A and the dimension count
// |module_gens| * dim_k(B) = dim_k(A) matches. Reported fields: dim_k = span
// of the products, dim_k_mod_m = dim_k(B), rank = |module_gens|.
FreenessReport free_over(const AlgebraPtr& A, const std::vector<AlgElem>& b_basis,
                         const std::vector<AlgElem>& module_gens);

// --- F_p-linear bridge (FpPi bases only) -----------------------------------

// Width of the k-linear coordinate space of A: length(R) * dim(A).
size_t k_width(const AlgebraPtr& A);
// k-coordinates of an element, digit-major per monomial: (c0, c1) per basis
// monomial in lexicographic order.
FpVec k_coords(const AlgebraPtr& A, const AlgElem& e);
AlgElem from_k_coords(const AlgebraPtr& A, const FpVec& v);

} // namespace ffgs

#endif
