#pragma once

// Builders for the standard finite flat group schemes used throughout:
// alpha_p, mu_{p^m}, the semidirect products G_lambda = alpha_p x| mu_{p^m},
// their infinitesimal deformations H~_a, and the Oort-Tate groups of order p.

#include "ffgs/hopf.hpp"

namespace ffgs {

// Parameter bundle shared by the CLI and the classification driver.
struct GroupParams {
    uint32_t p = 2;
    uint32_t m = 1;
    uint32_t lambda = 1;
    uint32_t a = 0; // residue-field parameter for tilde_h / Oort-Tate
    BaseRing base = BaseRing::fp(2);
};

// p-adic valuation of n (n > 0), capped at cap.
uint32_t v_p(uint32_t p, uint32_t n, uint32_t cap = 64);

// Integer power p^e (throws on overflow past 2^31).
uint32_t int_pow(uint32_t p, uint32_t e);

// O(alpha_p) = R[x]/(x^p), x primitive.
HopfPresentation alpha_p(const BaseRing& R);

// O(mu_{p^m}) = R[y]/(y^{p^m}), 1+y group-like.
HopfPresentation mu_pm(const BaseRing& R, uint32_t m);

// O(G_lambda) = R[x,y]/(x^p, y^{p^m}) with
//   Delta x = (1+y)^lambda (x) x + x (x) 1,  Delta y = y (x) 1 + 1 (x) y + y (x) y.
// Generator order: x = gen 0, y = gen 1. Requires 1 <= lambda <= p^m - 1.
HopfPresentation g_lambda(const BaseRing& R, uint32_t m, uint32_t lambda);

// Closed form for multiplication by p^h on G_lambda:
//   x |-> x * sum_{i<p^h} (1+y)^{lambda i},  y |-> (1+y)^{p^h} - 1.
std::vector<AlgElem> closed_form_power(const HopfPresentation& G, uint32_t lambda,
                                       uint32_t h);

// Oort-Tate group of order p: R[tau]/(tau^p - a tau) with
//   Delta tau = tau (x) 1 + 1 (x) tau + b W_p(tau (x) 1, 1 (x) tau),  a b = p in R.
HopfPresentation oort_tate(const BaseRing& R, uint32_t a, uint32_t b);

// The deformation family H~_a over a length-2 base (pi^2 = 0), lambda = p^{m-1}.
// Reduces to g_lambda(p^{m-1}) mod pi; for a != 0 the group-law twist represents
// the generating degree-2 class of the adjoint complex when m >= 2.
HopfPresentation tilde_h(const BaseRing& R, uint32_t m, uint32_t a);

// Automorphism of mu_{p^m} given by y |-> (1+y)^u - 1, u a unit mod p^m.
HopfMorphism psi_u(const BaseRing& R, uint32_t m, uint32_t u);

// Isomorphism g_lambda(lambda) -> g_lambda(u*lambda mod p^m):
//   x |-> x,  y |-> (1+y)^u - 1, for u a unit mod p^m.
HopfMorphism units_iso(const BaseRing& R, uint32_t m, uint32_t lambda, uint32_t u);

} // namespace ffgs
