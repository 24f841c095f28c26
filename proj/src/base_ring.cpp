#include "ffgs/base_ring.hpp"

namespace ffgs {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t mod_pow(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

} // namespace

BaseRing::BaseRing(RingKind kind, uint32_t p, uint32_t len)
    : kind_(kind), p_(p), len_(len) {
    if (!is_prime(p)) throw std::invalid_argument("BaseRing: p must be prime");
    if (len < 1 || len > 2) throw std::invalid_argument("BaseRing: length must be 1 or 2");
}

uint32_t BaseRing::size() const { return p_ * (len_ == 2 ? p_ : 1); }

uint32_t BaseRing::pi() const {
    if (len_ == 1) return 0;
    if (kind_ == RingKind::FpPi) return p_; // digit a1 = 1
    return p_;                              // Zmod(p,2): pi = p
}

uint32_t BaseRing::from_int(int64_t n) const {
    int64_t m = (kind_ == RingKind::Zmod && len_ == 2) ? int64_t(p_) * p_ : p_;
    int64_t r = n % m;
    if (r < 0) r += m;
    // FpPi: integers land in the prime field (digit a1 = 0).
    return static_cast<uint32_t>(r);
}

uint32_t BaseRing::from_digits(uint32_t a0, uint32_t a1) const {
    if (kind_ != RingKind::FpPi) throw std::invalid_argument("from_digits: FpPi only");
    if (len_ == 1 && a1 % p_ != 0) throw std::invalid_argument("from_digits: no pi in a field");
    return (a0 % p_) + (len_ == 2 ? (a1 % p_) * p_ : 0);
}

uint32_t BaseRing::add(uint32_t a, uint32_t b) const {
    if (kind_ == RingKind::Zmod) {
        uint32_t m = size();
        return (a + b) % m;
    }
    uint32_t a0 = (a % p_ + b % p_) % p_;
    uint32_t a1 = len_ == 2 ? (a / p_ + b / p_) % p_ : 0;
    return a0 + a1 * p_;
}

uint32_t BaseRing::neg(uint32_t a) const {
    if (kind_ == RingKind::Zmod) {
        uint32_t m = size();
        return a == 0 ? 0 : m - a;
    }
    uint32_t a0 = (p_ - a % p_) % p_;
    uint32_t a1 = len_ == 2 ? (p_ - a / p_) % p_ : 0;
    return a0 + a1 * p_;
}

uint32_t BaseRing::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t BaseRing::mul(uint32_t a, uint32_t b) const {
    if (kind_ == RingKind::Zmod) {
        uint64_t m = size();
        return static_cast<uint32_t>(uint64_t(a) * b % m);
    }
    // (a0 + a1 pi)(b0 + b1 pi) = a0 b0 + (a0 b1 + a1 b0) pi   (pi^2 = 0)
    uint32_t a0 = a % p_, a1 = a / p_;
    uint32_t b0 = b % p_, b1 = b / p_;
    uint32_t c0 = a0 * b0 % p_;
    uint32_t c1 = len_ == 2 ? (a0 * b1 + a1 * b0) % p_ : 0;
    return c0 + c1 * p_;
}

bool BaseRing::is_unit(uint32_t a) const { return residue(a) != 0; }

uint32_t BaseRing::inv(uint32_t a) const {
    if (!is_unit(a)) throw std::domain_error("BaseRing::inv: not a unit");
    if (kind_ == RingKind::Zmod) {
        uint32_t m = size();
        // Euler: unit group of Z/p^s has order p^(s-1)(p-1).
        uint32_t ord = (len_ == 2 ? p_ * (p_ - 1) : p_ - 1);
        return mod_pow(a, ord - 1, m);
    }
    uint32_t a0 = a % p_, a1 = a / p_;
    uint32_t i0 = mod_pow(a0, p_ - 2, p_);
    // (a0 + a1 pi)^-1 = i0 - i0^2 a1 pi
    uint32_t c1 = len_ == 2 ? (p_ - uint32_t(uint64_t(i0) * i0 % p_ * a1 % p_) % p_) % p_ : 0;
    return i0 + c1 * p_;
}

uint32_t BaseRing::residue(uint32_t a) const { return a % p_; }

bool BaseRing::annihilates_max_ideal(uint32_t a) const {
    if (len_ == 1) return true; // m = 0 in a field
    return is_zero(mul(a, pi()));
}

uint32_t BaseRing::pi_coefficient(uint32_t a) const {
    if (len_ == 1) {
        if (a != 0) throw std::domain_error("pi_coefficient: element not in pi*R");
        return 0;
    }
    if (kind_ == RingKind::FpPi) {
        if (a % p_ != 0) throw std::domain_error("pi_coefficient: element not in pi*R");
        return a / p_;
    }
    if (a % p_ != 0) throw std::domain_error("pi_coefficient: element not in pi*R");
    return (a / p_) % p_;
}

std::vector<uint32_t> BaseRing::all_elements() const {
    std::vector<uint32_t> out;
    out.reserve(size());
    for (uint32_t i = 0; i < size(); ++i) out.push_back(i);
    return out;
}

std::string BaseRing::show(uint32_t a) const {
    if (kind_ == RingKind::Zmod || len_ == 1) return std::to_string(a);
    uint32_t a0 = a % p_, a1 = a / p_;
    if (a1 == 0) return std::to_string(a0);
    std::string s = a1 == 1 ? "pi" : std::to_string(a1) + "*pi";
    if (a0 == 0) return s;
    return std::to_string(a0) + "+" + s;
}

std::string BaseRing::name() const {
    if (kind_ == RingKind::FpPi)
        return len_ == 1 ? "F" + std::to_string(p_)
                         : "F" + std::to_string(p_) + "[pi]/(pi^2)";
    return "Z/" + std::to_string(size());
}

} // namespace ffgs
