#ifndef FFGS_ALGEBRA_HPP
#define FFGS_ALGEBRA_HPP

#include "ffgs/base_ring.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ffgs {

// Exponent vector, one entry per generator of the owning algebra.
// std::vector's lexicographic operator< gives the canonical term order.
using Monomial = std::vector<uint16_t>;

class AlgebraPresentation;
using AlgebraPtr = std::shared_ptr<const AlgebraPresentation>;

// Sparse element of a truncated polynomial quotient ring. Terms are kept in
// normal form (all exponents below the generator bounds) with no zero
// coefficients, so equal elements have identical term maps.
class AlgElem {
public:
    AlgElem() = default;
    AlgElem(AlgebraPtr owner, std::map<Monomial, uint32_t> terms)
        : owner_(std::move(owner)), terms_(std::move(terms)) {}

    const AlgebraPtr& owner() const { return owner_; }
    const std::map<Monomial, uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool operator==(const AlgElem& o) const;
    bool operator!=(const AlgElem& o) const { return !(*this == o); }

private:
    AlgebraPtr owner_;
    std::map<Monomial, uint32_t> terms_;
};

// A raw (not yet reduced) formal sum: monomials with unbounded exponents.
using RawPoly = std::vector<std::pair<Monomial, uint32_t>>;

// Truncated multivariate quotient R[g_1..g_n]/(g_i^{d_i} - r_i). The tails
// r_i must guarantee terminating reduction: either every tail monomial has
// total degree < d_i, or every tail coefficient annihilates the maximal
// ideal of R (then a second substitution into a tail yields 0).
class AlgebraPresentation : public std::enable_shared_from_this<AlgebraPresentation> {
public:
    static AlgebraPtr make(BaseRing base, std::vector<std::string> names,
                           std::vector<uint32_t> bounds, std::vector<RawPoly> tails);

    const BaseRing& base() const { return base_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<uint32_t>& bounds() const { return bounds_; }
    const std::vector<AlgElem>& tails() const { return tails_; }
    size_t gen_count() const { return names_.size(); }
    uint64_t dimension() const; // rank as a free R-module
    int gen_index(const std::string& name) const; // -1 if absent

    // Monomial basis in lexicographic order.
    std::vector<Monomial> basis() const;

    bool same_as(const AlgebraPresentation& o) const; // structural equality

private:
    AlgebraPresentation(BaseRing base, std::vector<std::string> names,
                        std::vector<uint32_t> bounds)
        : base_(std::move(base)), names_(std::move(names)), bounds_(std::move(bounds)) {}

    BaseRing base_;
    std::vector<std::string> names_;
    std::vector<uint32_t> bounds_;
    std::vector<AlgElem> tails_;
};

// --- construction of elements ------------------------------------------

AlgElem normal_form(const AlgebraPtr& owner, const RawPoly& raw);
AlgElem alg_zero(const AlgebraPtr& owner);
AlgElem alg_one(const AlgebraPtr& owner);
AlgElem alg_scalar(const AlgebraPtr& owner, uint32_t c);
AlgElem alg_gen(const AlgebraPtr& owner, size_t i, uint16_t power = 1);
AlgElem alg_monomial(const AlgebraPtr& owner, const Monomial& m, uint32_t c);

// --- arithmetic ----------------------------------------------------------

AlgElem add(const AlgElem& u, const AlgElem& v);
AlgElem sub(const AlgElem& u, const AlgElem& v);
AlgElem neg(const AlgElem& u);
AlgElem scalar_mul(uint32_t c, const AlgElem& u);
AlgElem mul(const AlgElem& u, const AlgElem& v);
AlgElem pow(const AlgElem& u, uint32_t n);
// Inverse of a unit (constant term a unit, rest nilpotent), via Neumann series.
AlgElem inv(const AlgElem& u);

uint32_t coefficient_of(const AlgElem& e, const Monomial& mono);
uint32_t constant_term(const AlgElem& e);

// --- structure maps ------------------------------------------------------

// Tensor product with slot-tagged generator names (x -> x@1, ...).
AlgebraPtr tensor(const AlgebraPtr& A, const AlgebraPtr& B);
AlgebraPtr tensor_power(const AlgebraPtr& A, uint32_t k);

// Evaluate e (an element of any algebra over the same base) with generator i
// replaced by images[i], all living in `target`.
AlgElem substitute(const AlgebraPtr& target, const std::vector<AlgElem>& images,
                   const AlgElem& e);

// Images embedding the generators of a j-th tensor slot: slot_base is the
// number of generators preceding the slot in the target tensor algebra.
std::vector<AlgElem> slot_images(const AlgebraPtr& src, const AlgebraPtr& target,
                                 const std::vector<size_t>& gen_positions);

// The Witt addition carry polynomial W_p(a,b) = ((a+b)^p - a^p - b^p)/p with
// integer-exact binomials C(p,k)/p reduced into the base ring afterwards.
AlgElem wp_polynomial(uint32_t p, const AlgElem& a, const AlgElem& b);

// --- base-change helpers --------------------------------------------------

// Same presentation over the residue field; tail coefficients are reduced
// (pi-multiples become 0).
AlgebraPtr residue_algebra(const AlgebraPtr& A);
// Reduce an element of A into residue_algebra(A).
AlgElem residue_elem(const AlgebraPtr& Ak, const AlgElem& e);
// Lift an element of the residue model into A with every coefficient scaled
// by pi (used for tails pi*f and law twists pi*h).
AlgElem pi_lift(const AlgebraPtr& A, const AlgElem& field_elem);
// Write e = pi*c exactly and return c in the residue model; throws when e is
// not a pi-multiple.
AlgElem pi_coefficient_elem(const AlgebraPtr& Ak, const AlgElem& e);

std::string show(const AlgElem& e);

} // namespace ffgs

#endif
