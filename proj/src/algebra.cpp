#include "ffgs/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace ffgs {

namespace {

uint32_t total_degree(const Monomial& m) {
    uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

void check_same_owner(const AlgElem& u, const AlgElem& v) {
    if (!u.owner() || !v.owner() || !u.owner()->same_as(*v.owner()))
        throw std::invalid_argument("AlgElem: owner mismatch");
}

} // namespace

bool AlgElem::operator==(const AlgElem& o) const {
    if (owner_ && o.owner_ && !owner_->same_as(*o.owner_)) return false;
    return terms_ == o.terms_;
}

AlgebraPtr AlgebraPresentation::make(BaseRing base, std::vector<std::string> names,
                                     std::vector<uint32_t> bounds,
                                     std::vector<RawPoly> tails) {
    if (names.size() != bounds.size() || names.size() != tails.size())
        throw std::invalid_argument("AlgebraPresentation: size mismatch");
    for (auto b : bounds)
        if (b < 1) throw std::invalid_argument("AlgebraPresentation: bound < 1");
    auto A = AlgebraPtr(new AlgebraPresentation(base, std::move(names), std::move(bounds)));
    auto* mut = const_cast<AlgebraPresentation*>(A.get());
    mut->tails_.resize(A->gen_count());
    for (size_t i = 0; i < A->gen_count(); ++i) {
        AlgElem t = normal_form(A, tails[i]);
        // Termination: degree-decreasing tail, or coefficients killing m_R.
        bool degree_ok = true, ann_ok = true;
        for (const auto& [m, c] : t.terms()) {
            if (total_degree(m) >= A->bounds()[i]) degree_ok = false;
            if (!base.annihilates_max_ideal(c)) ann_ok = false;
        }
        if (!degree_ok && !ann_ok)
            throw std::invalid_argument("AlgebraPresentation: tail for " + A->names()[i] +
                                        " does not guarantee terminating reduction");
        // epsilon-compatibility hook: tails have zero constant term.
        if (constant_term(t) != 0)
            throw std::invalid_argument("AlgebraPresentation: tail with constant term");
        mut->tails_[i] = std::move(t);
    }
    return A;
}

uint64_t AlgebraPresentation::dimension() const {
    uint64_t d = 1;
    for (auto b : bounds_) d *= b;
    return d;
}

int AlgebraPresentation::gen_index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<Monomial> AlgebraPresentation::basis() const {
    std::vector<Monomial> out;
    out.reserve(dimension());
    Monomial m(gen_count(), 0);
    while (true) {
        out.push_back(m);
        size_t i = gen_count();
        while (i > 0) {
            --i;
            if (m[i] + 1u < bounds_[i]) {
                ++m[i];
                std::fill(m.begin() + i + 1, m.end(), 0);
                break;
            }
            if (i == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
        if (gen_count() == 0) return out; // R itself: single empty monomial
    }
}

bool AlgebraPresentation::same_as(const AlgebraPresentation& o) const {
    if (this == &o) return true;
    if (!(base_ == o.base_) || names_ != o.names_ || bounds_ != o.bounds_) return false;
    for (size_t i = 0; i < tails_.size(); ++i)
        if (tails_[i].terms() != o.tails_[i].terms()) return false;
    return true;
}

AlgElem normal_form(const AlgebraPtr& owner, const RawPoly& raw) {
    const auto& base = owner->base();
    const auto& bounds = owner->bounds();
    std::map<Monomial, uint32_t> result;
    // Worklist of unreduced terms. Each rewrite g_i^{d_i} -> tail either
    // strictly lowers degree or introduces an Ann(m)-coefficient that kills
    // any further tail coefficient, so this terminates.
    std::vector<std::pair<Monomial, uint32_t>> work(raw.begin(), raw.end());
    while (!work.empty()) {
        auto [m, c] = work.back();
        work.pop_back();
        if (c == 0) continue;
        if (m.size() != owner->gen_count())
            throw std::invalid_argument("normal_form: wrong monomial arity");
        size_t i = 0;
        for (; i < m.size(); ++i)
            if (m[i] >= bounds[i]) break;
        if (i == m.size()) {
            uint32_t s = base.add(result.count(m) ? result[m] : 0, c);
            if (s == 0) result.erase(m);
            else result[m] = s;
            continue;
        }
        // m = g_i^{d_i} * rest; push tail_i * rest.
        Monomial rest = m;
        rest[i] -= static_cast<uint16_t>(bounds[i]);
        for (const auto& [tm, tc] : owner->tails()[i].terms()) {
            Monomial prod = rest;
            for (size_t j = 0; j < prod.size(); ++j)
                prod[j] = static_cast<uint16_t>(prod[j] + tm[j]);
            work.emplace_back(std::move(prod), base.mul(c, tc));
        }
    }
    return AlgElem(owner, std::move(result));
}

AlgElem alg_zero(const AlgebraPtr& owner) { return AlgElem(owner, {}); }

AlgElem alg_one(const AlgebraPtr& owner) { return alg_scalar(owner, owner->base().one()); }

AlgElem alg_scalar(const AlgebraPtr& owner, uint32_t c) {
    if (c == 0) return alg_zero(owner);
    std::map<Monomial, uint32_t> t;
    t[Monomial(owner->gen_count(), 0)] = c;
    return AlgElem(owner, std::move(t));
}

AlgElem alg_gen(const AlgebraPtr& owner, size_t i, uint16_t power) {
    Monomial m(owner->gen_count(), 0);
    m[i] = power;
    return normal_form(owner, {{m, owner->base().one()}});
}

AlgElem alg_monomial(const AlgebraPtr& owner, const Monomial& m, uint32_t c) {
    return normal_form(owner, {{m, c}});
}

AlgElem add(const AlgElem& u, const AlgElem& v) {
    check_same_owner(u, v);
    const auto& base = u.owner()->base();
    std::map<Monomial, uint32_t> t = u.terms();
    for (const auto& [m, c] : v.terms()) {
        auto it = t.find(m);
        uint32_t s = base.add(it == t.end() ? 0 : it->second, c);
        if (s == 0) {
            if (it != t.end()) t.erase(it);
        } else {
            t[m] = s;
        }
    }
    return AlgElem(u.owner(), std::move(t));
}

AlgElem neg(const AlgElem& u) {
    const auto& base = u.owner()->base();
    std::map<Monomial, uint32_t> t;
    for (const auto& [m, c] : u.terms()) t[m] = base.neg(c);
    return AlgElem(u.owner(), std::move(t));
}

AlgElem sub(const AlgElem& u, const AlgElem& v) { return add(u, neg(v)); }

AlgElem scalar_mul(uint32_t c, const AlgElem& u) {
    const auto& base = u.owner()->base();
    if (c == 0) return alg_zero(u.owner());
    std::map<Monomial, uint32_t> t;
    for (const auto& [m, k] : u.terms()) {
        uint32_t s = base.mul(c, k);
        if (s != 0) t[m] = s;
    }
    return AlgElem(u.owner(), std::move(t));
}

AlgElem mul(const AlgElem& u, const AlgElem& v) {
    check_same_owner(u, v);
    const auto& base = u.owner()->base();
    RawPoly raw;
    raw.reserve(u.term_count() * v.term_count());
    for (const auto& [mu, cu] : u.terms())
        for (const auto& [mv, cv] : v.terms()) {
            uint32_t c = base.mul(cu, cv);
            if (c == 0) continue;
            Monomial m = mu;
            for (size_t i = 0; i < m.size(); ++i)
                m[i] = static_cast<uint16_t>(m[i] + mv[i]);
            raw.emplace_back(std::move(m), c);
        }
    return normal_form(u.owner(), raw);
}

AlgElem pow(const AlgElem& u, uint32_t n) {
    AlgElem r = alg_one(u.owner());
    AlgElem b = u;
    while (n) {
        if (n & 1) r = mul(r, b);
        n >>= 1;
        if (n) b = mul(b, b);
    }
    return r;
}

AlgElem inv(const AlgElem& u) {
    const auto& base = u.owner()->base();
    uint32_t c0 = constant_term(u);
    if (!base.is_unit(c0)) throw std::domain_error("inv: constant term is not a unit");
    uint32_t ic = base.inv(c0);
    // u = c0 (1 - n) with n nilpotent; u^-1 = c0^-1 (1 + n + n^2 + ...).
    AlgElem n = sub(alg_one(u.owner()), scalar_mul(ic, u));
    AlgElem acc = alg_one(u.owner());
    AlgElem term = alg_one(u.owner());
    uint64_t cap = 2 * u.owner()->dimension() + 2;
    for (uint64_t it = 0; it < cap; ++it) {
        term = mul(term, n);
        if (term.is_zero()) return scalar_mul(ic, acc);
        acc = add(acc, term);
    }
    throw std::domain_error("inv: element is not a unit (series did not terminate)");
}

uint32_t coefficient_of(const AlgElem& e, const Monomial& mono) {
    auto it = e.terms().find(mono);
    return it == e.terms().end() ? 0 : it->second;
}

uint32_t constant_term(const AlgElem& e) {
    return coefficient_of(e, Monomial(e.owner()->gen_count(), 0));
}

AlgebraPtr tensor(const AlgebraPtr& A, const AlgebraPtr& B) {
    if (!(A->base() == B->base())) throw std::invalid_argument("tensor: base mismatch");
    auto tag = [](const std::string& n, int slot) {
        auto at = n.find('@');
        std::string stem = at == std::string::npos ? n : n.substr(0, at);
        return stem + "@" + std::to_string(slot);
    };
    std::vector<std::string> names;
    std::vector<uint32_t> bounds;
    for (size_t i = 0; i < A->gen_count(); ++i) {
        names.push_back(tag(A->names()[i], 1));
        bounds.push_back(A->bounds()[i]);
    }
    for (size_t i = 0; i < B->gen_count(); ++i) {
        names.push_back(tag(B->names()[i], 2));
        bounds.push_back(B->bounds()[i]);
    }
    std::vector<RawPoly> tails(names.size());
    size_t nA = A->gen_count(), nB = B->gen_count();
    for (size_t i = 0; i < nA; ++i)
        for (const auto& [m, c] : A->tails()[i].terms()) {
            Monomial mm(nA + nB, 0);
            std::copy(m.begin(), m.end(), mm.begin());
            tails[i].emplace_back(std::move(mm), c);
        }
    for (size_t i = 0; i < nB; ++i)
        for (const auto& [m, c] : B->tails()[i].terms()) {
            Monomial mm(nA + nB, 0);
            std::copy(m.begin(), m.end(), mm.begin() + nA);
            tails[nA + i].emplace_back(std::move(mm), c);
        }
    return AlgebraPresentation::make(A->base(), std::move(names), std::move(bounds),
                                     std::move(tails));
}

AlgebraPtr tensor_power(const AlgebraPtr& A, uint32_t k) {
    if (k == 0)
        return AlgebraPresentation::make(A->base(), {}, {}, {});
    auto tag = [](const std::string& n, uint32_t slot) {
        auto at = n.find('@');
        std::string stem = at == std::string::npos ? n : n.substr(0, at);
        return stem + "@" + std::to_string(slot);
    };
    size_t nA = A->gen_count();
    std::vector<std::string> names;
    std::vector<uint32_t> bounds;
    std::vector<RawPoly> tails(nA * k);
    for (uint32_t s = 0; s < k; ++s)
        for (size_t i = 0; i < nA; ++i) {
            names.push_back(tag(A->names()[i], s + 1));
            bounds.push_back(A->bounds()[i]);
            for (const auto& [m, c] : A->tails()[i].terms()) {
                Monomial mm(nA * k, 0);
                std::copy(m.begin(), m.end(), mm.begin() + s * nA);
                tails[s * nA + i].emplace_back(std::move(mm), c);
            }
        }
    return AlgebraPresentation::make(A->base(), std::move(names), std::move(bounds),
                                     std::move(tails));
}

AlgElem substitute(const AlgebraPtr& target, const std::vector<AlgElem>& images,
                   const AlgElem& e) {
    if (!e.owner()) throw std::invalid_argument("substitute: element without owner");
    if (images.size() != e.owner()->gen_count())
        throw std::invalid_argument("substitute: image count mismatch");
    if (!(target->base() == e.owner()->base()))
        throw std::invalid_argument("substitute: base mismatch");
    // Cache powers of each image up to the needed exponent.
    std::vector<std::vector<AlgElem>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i) powers[i].push_back(alg_one(target));
    AlgElem acc = alg_zero(target);
    for (const auto& [m, c] : e.terms()) {
        AlgElem term = alg_scalar(target, c);
        for (size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= m[i]) pw.push_back(mul(pw.back(), images[i]));
            term = mul(term, pw[m[i]]);
        }
        acc = add(acc, term);
    }
    return acc;
}

std::vector<AlgElem> slot_images(const AlgebraPtr& src, const AlgebraPtr& target,
                                 const std::vector<size_t>& gen_positions) {
    if (gen_positions.size() != src->gen_count())
        throw std::invalid_argument("slot_images: position count mismatch");
    std::vector<AlgElem> images;
    images.reserve(src->gen_count());
    for (size_t i = 0; i < src->gen_count(); ++i)
        images.push_back(alg_gen(target, gen_positions[i]));
    return images;
}

AlgElem wp_polynomial(uint32_t p, const AlgElem& a, const AlgElem& b) {
    check_same_owner(a, b);
    const auto& base = a.owner()->base();
    // C(p,k)/p over Z, exact for 0 < k < p.
    std::vector<int64_t> binom(p + 1, 0);
    binom[0] = 1;
    for (uint32_t row = 1; row <= p; ++row)
        for (uint32_t k = row; k > 0; --k) binom[k] += binom[k - 1];
    AlgElem acc = alg_zero(a.owner());
    for (uint32_t k = 1; k < p; ++k) {
        int64_t c = binom[k] / static_cast<int64_t>(p);
        AlgElem t = mul(pow(a, k), pow(b, p - k));
        acc = add(acc, scalar_mul(base.from_int(c), t));
    }
    return acc;
}

AlgebraPtr residue_algebra(const AlgebraPtr& A) {
    BaseRing k = BaseRing::fp(A->base().p());
    std::vector<RawPoly> tails;
    for (const auto& t : A->tails()) {
        RawPoly raw;
        for (const auto& [m, c] : t.terms()) {
            uint32_t r = A->base().residue(c);
            if (r != 0) raw.emplace_back(m, r);
        }
        tails.push_back(std::move(raw));
    }
    return AlgebraPresentation::make(k, A->names(), A->bounds(), std::move(tails));
}

AlgElem residue_elem(const AlgebraPtr& Ak, const AlgElem& e) {
    RawPoly raw;
    for (const auto& [m, c] : e.terms()) {
        uint32_t r = e.owner()->base().residue(c);
        if (r != 0) raw.emplace_back(m, r);
    }
    return normal_form(Ak, raw);
}

AlgElem pi_lift(const AlgebraPtr& A, const AlgElem& field_elem) {
    const auto& base = A->base();
    uint32_t pi = base.pi();
    RawPoly raw;
    for (const auto& [m, c] : field_elem.terms())
        raw.emplace_back(m, base.mul(pi, base.from_int(c)));
    return normal_form(A, raw);
}

AlgElem pi_coefficient_elem(const AlgebraPtr& Ak, const AlgElem& e) {
    RawPoly raw;
    for (const auto& [m, c] : e.terms()) {
        uint32_t r = e.owner()->base().pi_coefficient(c);
        if (r != 0) raw.emplace_back(m, r);
    }
    return normal_form(Ak, raw);
}

std::string show(const AlgElem& e) {
    if (e.is_zero()) return "0";
    const auto& names = e.owner()->names();
    const auto& base = e.owner()->base();
    std::string out;
    for (const auto& [m, c] : e.terms()) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string coeff = base.show(c);
        if (mono.empty()) out += coeff;
        else if (coeff == "1") out += mono;
        else out += coeff + "*" + mono;
    }
    return out;
}

} // namespace ffgs
