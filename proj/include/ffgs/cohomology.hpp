#pragma once

// Hochschild-style comodule cohomology: C^n(G,V) = V (x) A^(x)n with the
// cosimplicial differential (coaction into slot 1, Delta on inner slots,
// unit appended on the right). All linear algebra happens over the residue
// field via the digit-major k-coordinate bridge.

#include "ffgs/hopf.hpp"

namespace ffgs {

inline constexpr uint64_t kDefaultBudget = 2'000'000;

// A finite free right comodule of rank r given by its coaction matrix:
//   rho(e_j) = sum_i e_i (x) action[i][j],  action[i][j] in A.
struct Comodule {
    HopfPresentation G;
    size_t rank = 0;
    std::vector<std::vector<AlgElem>> action;
    std::string name;
};

struct ComoduleReport {
    bool counit_ok = false;  // eps(M_ij) = delta_ij
    bool coassoc_ok = false; // Delta(M_ij) = sum_k M_ik@1 * M_kj@2
    std::string witness;

    bool ok() const { return counit_ok && coassoc_ok; }
};

ComoduleReport check_comodule(const Comodule& V);

// Rank-r comodule with identity coaction.
Comodule trivial_rep(const HopfPresentation& G, size_t rank = 1);
// Rank-1 comodule on a group-like element g (eps(g) = 1, Delta g = g (x) g).
Comodule character_rep(const HopfPresentation& G, const AlgElem& group_like,
                       const std::string& name);
// The rank-2 diagonal comodule diag((1+y)^{lambda p}, 1) on a g_lambda
// presentation; the natural home of group-law closure residuals.
Comodule vbar_rep(const HopfPresentation& G, uint32_t lambda);
// Adjoint comodule of rank gen_count from universal conjugation of an
// infinitesimal point; requires tails without linear terms.
Comodule adjoint_rep(const HopfPresentation& G);

// An n-cochain: one element of T^n = A^(x)n per comodule basis vector.
using Cochain = std::vector<AlgElem>;

// Lazy cochain-space/differential cache for a fixed comodule.
class CochainComplex {
  public:
    explicit CochainComplex(Comodule V, uint64_t budget = kDefaultBudget);

    const Comodule& comodule() const { return V_; }
    const AlgebraPtr& space(uint32_t n);  // T^n, cached
    size_t width(uint32_t n);             // rank * k_width(T^n)

    Cochain zero(uint32_t n);
    Cochain apply_d(uint32_t n, const Cochain& f);
    FpVec coords(uint32_t n, const Cochain& f);
    Cochain from_coords(uint32_t n, const FpVec& v);
    // The matrix of d^n on k-coordinates: width(n+1) x width(n). Throws
    // BudgetExceeded when the cell count overruns the budget.
    const FpMat& matrix(uint32_t n);

  private:
    Comodule V_;
    uint64_t budget_;
    std::vector<AlgebraPtr> spaces_;
    std::map<uint32_t, FpMat> matrices_;
};

struct CohomologyResult {
    uint32_t degree = 0;
    size_t dim_kernel = 0;
    size_t dim_image = 0; // image of d^{degree-1}
    size_t dim_h = 0;
    std::vector<Cochain> representatives; // echelonized modulo coboundaries
    std::vector<std::string> flags;       // aligned with representatives
};

// H^degree(G, V). When `probe` is given, each representative cohomologous to
// the probe is flagged with `probe_flag`.
CohomologyResult cohomology(const Comodule& V, uint32_t degree,
                            uint64_t budget = kDefaultBudget,
                            const std::optional<Cochain>& probe = std::nullopt,
                            const std::string& probe_flag = "witt-carry-class");

bool is_cocycle(const Comodule& V, uint32_t degree, const Cochain& f,
                uint64_t budget = kDefaultBudget);
// Preimage under d^{degree-1} when f is a coboundary.
std::optional<Cochain> is_coboundary(const Comodule& V, uint32_t degree,
                                     const Cochain& f,
                                     uint64_t budget = kDefaultBudget);

// The Witt-carry 2-cochain: component `slot` carries W_p(x (x) 1, u (x) x)
// where u = (1+y)^lambda on two-generator presentations and u = 1 on alpha_p;
// all other components zero.
Cochain wp_class_cochain(const Comodule& V, uint32_t lambda, size_t slot);

struct DiagInvariantsResult {
    uint32_t degree = 0;
    size_t dim = 0;            // dim H^degree of the weight-0 subcomplex
    size_t subcomplex_dim = 0; // k-dimension of the weight-0 part in C^degree
    int weight_sign = 0;       // slot-weight sign validated by the chain map
};

// Invariant-weight reduction for G_lambda: restricts C^*(alpha_p, V|_N) to
// the weight-0 graded piece under the mu_{p^m}-action and reports dim H^i.
// Valid because cohomology of the diagonalizable quotient vanishes in
// positive degrees, so H^i(G) = H^i(N, -)^{G/N}.
DiagInvariantsResult diagonalizable_invariants(const HopfPresentation& G,
                                               uint32_t lambda, const Comodule& V,
                                               uint32_t degree,
                                               uint64_t budget = kDefaultBudget);

} // namespace ffgs
