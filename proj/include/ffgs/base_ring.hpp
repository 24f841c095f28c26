#ifndef FFGS_BASE_RING_HPP
#define FFGS_BASE_RING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffgs {

// Artin local coefficient rings with residue field F_p:
//   FpPi : F_p[pi]/(pi^e), e in {1,2}; elements a0 + a1*pi stored base p.
//   Zmod : Z/p^s, s in {1,2}, with pi := p^(s-1).
// Both are finite; elements are canonical residues encoded as uint32_t.
enum class RingKind : uint8_t { FpPi, Zmod };

class BaseRing {
public:
    BaseRing(RingKind kind, uint32_t p, uint32_t len);

    static BaseRing fp(uint32_t p) { return BaseRing(RingKind::FpPi, p, 1); }
    static BaseRing fp_pi(uint32_t p) { return BaseRing(RingKind::FpPi, p, 2); }
    static BaseRing zmod(uint32_t p, uint32_t s) { return BaseRing(RingKind::Zmod, p, s); }

    RingKind kind() const { return kind_; }
    uint32_t p() const { return p_; }
    // Length as an R-module over itself (e or s); the residue field has length 1.
    uint32_t length() const { return len_; }
    bool is_field() const { return len_ == 1; }
    uint32_t size() const; // number of elements

    bool operator==(const BaseRing& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && len_ == o.len_;
    }
    bool operator!=(const BaseRing& o) const { return !(*this == o); }

    // --- element constructors -------------------------------------------
    uint32_t zero() const { return 0; }
    uint32_t one() const { return from_int(1); }
    uint32_t pi() const;           // designated nilpotent (0 when length()==1)
    uint32_t from_int(int64_t n) const;
    // FpPi only: a0 + a1*pi from digits.
    uint32_t from_digits(uint32_t a0, uint32_t a1) const;

    // --- arithmetic -------------------------------------------------------
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const; // throws if not a unit
    bool is_unit(uint32_t a) const;
    bool is_zero(uint32_t a) const { return a == 0; }

    // Residue of a in F_p = R/m.
    uint32_t residue(uint32_t a) const;
    // True when a * m_R = 0 (i.e. a is divisible by pi, or R is a field).
    bool annihilates_max_ideal(uint32_t a) const;
    // The pi-coefficient: for a in pi*R writes a = pi*c and returns the residue c in F_p.
    // Throws if a is not in pi*R.
    uint32_t pi_coefficient(uint32_t a) const;

    // Enumeration (rings are tiny; used by exhaustive invariant tests).
    std::vector<uint32_t> all_elements() const;

    std::string show(uint32_t a) const;
    std::string name() const;

private:
    RingKind kind_;
    uint32_t p_;
    uint32_t len_;
};

} // namespace ffgs

#endif
