#include "ffgs/hopf.hpp"

#include <algorithm>

namespace ffgs {

namespace {

// Images embedding A into tensor slot s (1-based) of T^k.
std::vector<AlgElem> embed_images(const AlgebraPtr& A, const AlgebraPtr& Tk, uint32_t s) {
    std::vector<AlgElem> images;
    images.reserve(A->gen_count());
    for (size_t i = 0; i < A->gen_count(); ++i)
        images.push_back(alg_gen(Tk, (s - 1) * A->gen_count() + i));
    return images;
}

AlgElem embed(const AlgebraPtr& A, const AlgebraPtr& Tk, uint32_t s, const AlgElem& e) {
    return substitute(Tk, embed_images(A, Tk, s), e);
}

} // namespace

AlgElem embed_in_slot(const AlgebraPtr& A, const AlgebraPtr& Tk, uint32_t s,
                      const AlgElem& e) {
    return embed(A, Tk, s, e);
}

HopfPresentation make_hopf(AlgebraPtr A, std::vector<AlgElem> comul,
                           std::vector<uint32_t> counit,
                           std::optional<std::vector<AlgElem>> antipode) {
    if (comul.size() != A->gen_count() || counit.size() != A->gen_count())
        throw std::invalid_argument("make_hopf: structure map count mismatch");
    HopfPresentation G;
    G.T2 = tensor_power(A, 2);
    G.A = std::move(A);
    for (auto& c : comul)
        if (!c.owner()->same_as(*G.T2))
            throw std::invalid_argument("make_hopf: comultiplication image not in A(x)A");
    G.comul = std::move(comul);
    G.counit = std::move(counit);
    G.antipode = std::move(antipode);
    return G;
}

AlgElem apply_comul(const HopfPresentation& G, const AlgElem& e) {
    return substitute(G.T2, G.comul, e);
}

AlgElem apply_comul_slot(const HopfPresentation& G, const AlgebraPtr& Tk,
                         const AlgebraPtr& Tk1, uint32_t k, uint32_t s,
                         const AlgElem& e) {
    (void)Tk; // the source power is implicit in e; kept for call-site clarity
    size_t n = G.A->gen_count();
    // Comultiplication images re-embedded into slots (s, s+1) of T^(k+1).
    std::vector<AlgElem> comul_emb(n);
    {
        std::vector<AlgElem> t2_images;
        t2_images.reserve(2 * n);
        for (uint32_t a = 0; a < 2; ++a)
            for (size_t i = 0; i < n; ++i)
                t2_images.push_back(alg_gen(Tk1, (s - 1 + a) * n + i));
        for (size_t i = 0; i < n; ++i)
            comul_emb[i] = substitute(Tk1, t2_images, G.comul[i]);
    }
    std::vector<AlgElem> images;
    images.reserve(k * n);
    for (uint32_t t = 1; t <= k; ++t)
        for (size_t i = 0; i < n; ++i) {
            if (t < s) images.push_back(alg_gen(Tk1, (t - 1) * n + i));
            else if (t == s) images.push_back(comul_emb[i]);
            else images.push_back(alg_gen(Tk1, t * n + i));
        }
    return substitute(Tk1, images, e);
}

uint32_t counit_eval(const HopfPresentation& G, const AlgElem& e) {
    const auto& base = G.base();
    uint32_t acc = 0;
    for (const auto& [m, c] : e.terms()) {
        uint32_t t = c;
        for (size_t i = 0; i < m.size(); ++i)
            for (uint16_t k = 0; k < m[i]; ++k) t = base.mul(t, G.counit[i]);
        acc = base.add(acc, t);
    }
    return acc;
}

AxiomReport check_axioms(const HopfPresentation& G) {
    AxiomReport rep;
    const auto& A = G.A;
    const auto& base = G.base();
    size_t n = A->gen_count();
    auto note = [&](const std::string& w) {
        if (rep.witness.empty()) rep.witness = w;
    };

    // Well-definedness: structure maps must respect gen^d = tail.
    rep.well_defined_comul = true;
    for (size_t i = 0; i < n; ++i) {
        AlgElem lhs = pow(G.comul[i], A->bounds()[i]);
        AlgElem rhs = substitute(G.T2, G.comul, A->tails()[i]);
        if (lhs != rhs) {
            rep.well_defined_comul = false;
            note("comul not defined on relation for " + A->names()[i]);
        }
    }
    rep.well_defined_counit = true;
    for (size_t i = 0; i < n; ++i) {
        uint32_t lhs = base.one();
        for (uint32_t k = 0; k < A->bounds()[i]; ++k) lhs = base.mul(lhs, G.counit[i]);
        uint32_t rhs = counit_eval(G, A->tails()[i]);
        if (lhs != rhs) {
            rep.well_defined_counit = false;
            note("counit not defined on relation for " + A->names()[i]);
        }
    }
    rep.has_antipode = G.antipode.has_value();
    rep.well_defined_antipode = true;
    if (rep.has_antipode) {
        for (size_t i = 0; i < n; ++i) {
            AlgElem lhs = pow((*G.antipode)[i], A->bounds()[i]);
            AlgElem rhs = substitute(A, *G.antipode, A->tails()[i]);
            if (lhs != rhs) {
                rep.well_defined_antipode = false;
                note("antipode not defined on relation for " + A->names()[i]);
            }
        }
    }

    // Coassociativity on generators.
    AlgebraPtr T3 = tensor_power(A, 3);
    rep.coassociative = true;
    for (size_t i = 0; i < n; ++i) {
        AlgElem left = apply_comul_slot(G, G.T2, T3, 2, 1, G.comul[i]);
        AlgElem right = apply_comul_slot(G, G.T2, T3, 2, 2, G.comul[i]);
        if (left != right) {
            rep.coassociative = false;
            note("coassociativity fails on " + A->names()[i]);
        }
    }

    // Counit law: (eps (x) id)Delta = id = (id (x) eps)Delta.
    rep.counit_left = rep.counit_right = true;
    {
        std::vector<AlgElem> eps_first, eps_second;
        for (size_t i = 0; i < n; ++i) {
            eps_first.push_back(alg_scalar(A, G.counit[i]));
            eps_second.push_back(alg_gen(A, i));
        }
        std::vector<AlgElem> left_images = eps_first, right_images = eps_second;
        left_images.insert(left_images.end(), eps_second.begin(), eps_second.end());
        right_images.insert(right_images.end(), eps_first.begin(), eps_first.end());
        for (size_t i = 0; i < n; ++i) {
            AlgElem id_elem = alg_gen(A, i);
            if (substitute(A, left_images, G.comul[i]) != id_elem) {
                rep.counit_left = false;
                note("left counit law fails on " + A->names()[i]);
            }
            if (substitute(A, right_images, G.comul[i]) != id_elem) {
                rep.counit_right = false;
                note("right counit law fails on " + A->names()[i]);
            }
        }
    }

    // Antipode law: m(S (x) id)Delta = unit.counit = m(id (x) S)Delta.
    rep.antipode_left = rep.antipode_right = true;
    if (rep.has_antipode) {
        std::vector<AlgElem> s_first = *G.antipode, s_second, id_imgs;
        for (size_t i = 0; i < n; ++i) id_imgs.push_back(alg_gen(A, i));
        std::vector<AlgElem> left_images = s_first;
        left_images.insert(left_images.end(), id_imgs.begin(), id_imgs.end());
        std::vector<AlgElem> right_images = id_imgs;
        right_images.insert(right_images.end(), G.antipode->begin(), G.antipode->end());
        for (size_t i = 0; i < n; ++i) {
            AlgElem target = alg_scalar(A, G.counit[i]);
            if (substitute(A, left_images, G.comul[i]) != target) {
                rep.antipode_left = false;
                note("left antipode law fails on " + A->names()[i]);
            }
            if (substitute(A, right_images, G.comul[i]) != target) {
                rep.antipode_right = false;
                note("right antipode law fails on " + A->names()[i]);
            }
        }
    }
    return rep;
}

std::vector<AlgElem> solve_antipode(const HopfPresentation& G) {
    const auto& A = G.A;
    size_t n = A->gen_count();
    // Iterate S <- S - (m(S (x) id)Delta - unit.counit); each pass pushes the
    // residual deeper into powers of the augmentation ideal, which is
    // nilpotent for the finite connected-by-multiplicative algebras in scope.
    std::vector<AlgElem> S(n);
    for (size_t i = 0; i < n; ++i) S[i] = neg(alg_gen(A, i));
    std::vector<AlgElem> id_imgs;
    for (size_t i = 0; i < n; ++i) id_imgs.push_back(alg_gen(A, i));
    uint64_t cap = 2 * A->dimension() + 4;
    for (uint64_t it = 0; it < cap; ++it) {
        std::vector<AlgElem> images = S;
        images.insert(images.end(), id_imgs.begin(), id_imgs.end());
        bool done = true;
        std::vector<AlgElem> next = S;
        for (size_t i = 0; i < n; ++i) {
            AlgElem resid = sub(substitute(A, images, G.comul[i]), alg_scalar(A, G.counit[i]));
            if (!resid.is_zero()) {
                done = false;
                next[i] = sub(S[i], resid);
            }
        }
        if (done) {
            HopfPresentation H = G;
            H.antipode = S;
            AxiomReport rep = check_axioms(H);
            if (!rep.antipode_left || !rep.antipode_right || !rep.well_defined_antipode)
                throw std::runtime_error("solve_antipode: candidate failed verification");
            return S;
        }
        S = std::move(next);
    }
    throw std::runtime_error("solve_antipode: no solution (non-Hopf input?)");
}

std::vector<AlgElem> convolution(const HopfPresentation& G,
                                 const std::vector<AlgElem>& f,
                                 const std::vector<AlgElem>& g) {
    std::vector<AlgElem> images = f;
    images.insert(images.end(), g.begin(), g.end());
    std::vector<AlgElem> out;
    out.reserve(G.A->gen_count());
    for (size_t i = 0; i < G.A->gen_count(); ++i)
        out.push_back(substitute(G.A, images, G.comul[i]));
    return out;
}

std::vector<AlgElem> mult_by_n(const HopfPresentation& G, uint32_t n) {
    size_t g = G.A->gen_count();
    std::vector<AlgElem> cur(g);
    for (size_t i = 0; i < g; ++i) cur[i] = alg_scalar(G.A, G.counit[i]);
    std::vector<AlgElem> id_imgs;
    for (size_t i = 0; i < g; ++i) id_imgs.push_back(alg_gen(G.A, i));
    for (uint32_t k = 0; k < n; ++k) cur = convolution(G, cur, id_imgs);
    return cur;
}

std::vector<AlgElem> mult_by_n_convolution(const HopfPresentation& G, uint32_t n) {
    size_t g = G.A->gen_count();
    std::vector<AlgElem> acc(g), base(g);
    for (size_t i = 0; i < g; ++i) {
        acc[i] = alg_scalar(G.A, G.counit[i]); // [0] = unit.counit
        base[i] = alg_gen(G.A, i);             // identity
    }
    while (n) {
        if (n & 1) acc = convolution(G, acc, base);
        n >>= 1;
        if (n) base = convolution(G, base, base);
    }
    return acc;
}

bool is_killed_by(const HopfPresentation& G, uint32_t n) {
    std::vector<AlgElem> im = mult_by_n(G, n);
    for (size_t i = 0; i < im.size(); ++i)
        if (im[i] != alg_scalar(G.A, G.counit[i])) return false;
    return true;
}

uint32_t exponent(const HopfPresentation& G) {
    uint32_t p = G.base().p();
    uint64_t pow_h = 1;
    for (uint32_t h = 0; h <= 40; ++h) {
        if (pow_h <= 0xffffffffULL && is_killed_by(G, static_cast<uint32_t>(pow_h)))
            return h;
        if (pow_h > G.order() * p) break;
        pow_h *= p;
    }
    throw std::runtime_error("exponent: no p-power kills the group within the order bound");
}

MorphismReport check_morphism(const HopfMorphism& phi) {
    MorphismReport rep;
    const auto& S = phi.source;
    const auto& T = phi.target;
    size_t n = S.A->gen_count();
    if (phi.images.size() != n) throw std::invalid_argument("check_morphism: image count");
    auto note = [&](const std::string& w) {
        if (rep.witness.empty()) rep.witness = w;
    };

    rep.respects_relations = true;
    for (size_t i = 0; i < n; ++i) {
        AlgElem lhs = pow(phi.images[i], S.A->bounds()[i]);
        AlgElem rhs = substitute(T.A, phi.images, S.A->tails()[i]);
        if (lhs != rhs) {
            rep.respects_relations = false;
            note("relation for " + S.A->names()[i] + " not respected");
        }
    }

    rep.respects_comul = true;
    {
        // (phi (x) phi) images over the source T2 generators.
        std::vector<AlgElem> both;
        both.reserve(2 * n);
        for (uint32_t s = 1; s <= 2; ++s)
            for (size_t i = 0; i < n; ++i)
                both.push_back(embed(T.A, T.T2, s, phi.images[i]));
        for (size_t i = 0; i < n; ++i) {
            AlgElem lhs = apply_comul(T, phi.images[i]);
            AlgElem rhs = substitute(T.T2, both, S.comul[i]);
            if (lhs != rhs) {
                rep.respects_comul = false;
                note("comultiplication not respected on " + S.A->names()[i]);
            }
        }
    }

    rep.respects_counit = true;
    for (size_t i = 0; i < n; ++i)
        if (counit_eval(T, phi.images[i]) != S.counit[i]) {
            rep.respects_counit = false;
            note("counit not respected on " + S.A->names()[i]);
        }

    // Invertibility. Over a local base a map of finite free modules is
    // invertible iff its reduction mod m is; for F_p-linear bases we solve on
    // the full k-realification and so exhibit the inverse implicitly.
    if (S.A->dimension() != T.A->dimension()) {
        rep.invertible = false;
        note("dimension mismatch");
        return rep;
    }
    if (S.base().kind() == RingKind::FpPi) {
        size_t w = k_width(T.A);
        auto src_basis = S.A->basis();
        uint32_t p = S.base().p();
        uint32_t len = S.base().length();
        FpMat M(p, w, w);
        size_t col = 0;
        for (const auto& mono : src_basis) {
            AlgElem im = substitute(T.A, phi.images, alg_monomial(S.A, mono, S.base().one()));
            FpVec c0 = k_coords(T.A, im);
            for (size_t r = 0; r < w; ++r) M.set(r, col, c0[r]);
            ++col;
            if (len == 2) {
                FpVec c1 = k_coords(T.A, scalar_mul(S.base().pi(), im));
                for (size_t r = 0; r < w; ++r) M.set(r, col, c1[r]);
                ++col;
            }
        }
        rep.invertible = (M.rank() == w);
    } else {
        // Zmod: reduce mod m and test rank over the residue field.
        auto Sk = residue_algebra(S.A);
        auto Tk = residue_algebra(T.A);
        auto src_basis = Sk->basis();
        auto tgt_basis = Tk->basis();
        uint32_t p = S.base().p();
        FpMat M(p, tgt_basis.size(), src_basis.size());
        for (size_t c = 0; c < src_basis.size(); ++c) {
            AlgElem im = substitute(T.A, phi.images,
                                    alg_monomial(S.A, src_basis[c], S.base().one()));
            AlgElem imk = residue_elem(Tk, im);
            for (size_t r = 0; r < tgt_basis.size(); ++r)
                M.set(r, c, static_cast<uint8_t>(coefficient_of(imk, tgt_basis[r])));
        }
        rep.invertible = (M.rank() == src_basis.size());
    }
    if (!rep.invertible) note("not invertible");
    return rep;
}

size_t k_width(const AlgebraPtr& A) {
    if (A->base().kind() != RingKind::FpPi && A->base().length() != 1)
        throw std::invalid_argument("k_width: base is not F_p-linear");
    return A->base().length() * A->dimension();
}

FpVec k_coords(const AlgebraPtr& A, const AlgElem& e) {
    const auto& base = A->base();
    if (base.kind() != RingKind::FpPi && base.length() != 1)
        throw std::invalid_argument("k_coords: base is not F_p-linear");
    uint32_t p = base.p();
    uint32_t len = base.length();
    auto basis = A->basis();
    FpVec v(len * basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        uint32_t c = coefficient_of(e, basis[i]);
        v[len * i] = static_cast<uint8_t>(c % p);
        if (len == 2) v[len * i + 1] = static_cast<uint8_t>(c / p);
    }
    return v;
}

AlgElem from_k_coords(const AlgebraPtr& A, const FpVec& v) {
    const auto& base = A->base();
    uint32_t len = base.length();
    auto basis = A->basis();
    if (v.size() != len * basis.size()) throw std::invalid_argument("from_k_coords: size");
    RawPoly raw;
    for (size_t i = 0; i < basis.size(); ++i) {
        uint32_t c = v[len * i] + (len == 2 ? v[len * i + 1] * base.p() : 0);
        if (c != 0) raw.emplace_back(basis[i], c);
    }
    return normal_form(A, raw);
}

QuotientResult quotient_subalgebra(const HopfPresentation& G,
                                   const std::vector<size_t>& j_gens,
                                   bool mirrored) {
    QuotientResult out;
    const auto& A = G.A;
    const auto& base = G.base();
    if (base.kind() != RingKind::FpPi && base.length() != 1)
        throw std::invalid_argument("quotient_subalgebra: base must be F_p-linear");
    uint32_t p = base.p();
    uint32_t len = base.length();
    size_t n = A->gen_count();
    std::vector<bool> in_j(n, false);
    for (auto j : j_gens) in_j[j] = true;

    auto t2_basis = G.T2->basis();
    auto a_basis = A->basis();
    size_t t2w = len * t2_basis.size();

    // k-span of J (x) A (resp. A (x) J) inside T2, where J is the ideal
    // generated by the selected generators.
    RowSpace ideal_span(p, t2w);
    for (size_t g = 0; g < n; ++g) {
        if (!in_j[g]) continue;
        for (const auto& mu : a_basis) {
            AlgElem jm = mul(alg_gen(A, g), alg_monomial(A, mu, base.one()));
            for (const auto& nu : a_basis) {
                AlgElem other = alg_monomial(A, nu, base.one());
                AlgElem prod = mirrored
                                   ? mul(embed(A, G.T2, 1, other), embed(A, G.T2, 2, jm))
                                   : mul(embed(A, G.T2, 1, jm), embed(A, G.T2, 2, other));
                ideal_span.insert(k_coords(G.T2, prod));
                if (len == 2) ideal_span.insert(k_coords(G.T2, scalar_mul(base.pi(), prod)));
            }
        }
    }

    size_t cols = len * a_basis.size();
    FpMat M(p, t2w, cols);
    for (size_t bi = 0; bi < a_basis.size(); ++bi) {
        AlgElem mono = alg_monomial(A, a_basis[bi], base.one());
        for (uint32_t d = 0; d < len; ++d) {
            AlgElem b = d == 0 ? mono : scalar_mul(base.pi(), mono);
            AlgElem emb_b = mirrored ? embed(A, G.T2, 1, b) : embed(A, G.T2, 2, b);
            AlgElem cond = sub(apply_comul(G, b), emb_b);
            FpVec reduced = ideal_span.reduce(k_coords(G.T2, cond));
            size_t col = len * bi + d;
            for (size_t r = 0; r < t2w; ++r) M.set(r, col, reduced[r]);
        }
    }

    // Canonical echelonized basis of the solution space.
    RowSpace span(p, cols);
    for (const auto& kv : M.kernel_basis()) span.insert(kv);
    for (const auto& row : span.rows()) out.basis.push_back(from_k_coords(A, row));

    // Closure under multiplication.
    out.closed_under_mul = true;
    for (size_t i = 0; i < out.basis.size() && out.closed_under_mul; ++i)
        for (size_t j = i; j < out.basis.size(); ++j)
            if (!span.contains(k_coords(A, mul(out.basis[i], out.basis[j])))) {
                out.closed_under_mul = false;
                break;
            }

    // Delta-stability: Delta(B) within span(B (x) B).
    RowSpace span2(p, len * t2_basis.size());
    for (const auto& bi : out.basis)
        for (const auto& bj : out.basis) {
            AlgElem prod = mul(embed(A, G.T2, 1, bi), embed(A, G.T2, 2, bj));
            span2.insert(k_coords(G.T2, prod));
            if (len == 2) span2.insert(k_coords(G.T2, scalar_mul(base.pi(), prod)));
        }
    out.comul_stable = true;
    for (const auto& b : out.basis)
        if (!span2.contains(k_coords(G.T2, apply_comul(G, b)))) {
            out.comul_stable = false;
            break;
        }
    if (!out.comul_stable) {
        out.note = "B is not Delta-stable (non-normal N?)";
        return out;
    }

    // Attempt a monogenic presentation B = R[t]/(t^D - tail).
    if (out.basis.empty()) return out;
    size_t dim_k_B = span.rank();
    if (dim_k_B % len != 0) {
        out.note = "B is not a free R-module";
        return out;
    }
    size_t D = dim_k_B / len;
    for (const auto& cand : out.basis) {
        if (counit_eval(G, cand) != 0) continue;
        AlgElem eta = cand;
        // Powers must span B over R.
        RowSpace pspan(p, cols);
        std::vector<AlgElem> powers;
        AlgElem cur = alg_one(A);
        bool ok = true;
        for (size_t i = 0; i < D; ++i) {
            powers.push_back(cur);
            if (!pspan.insert(k_coords(A, cur))) { ok = false; break; }
            if (len == 2) pspan.insert(k_coords(A, scalar_mul(base.pi(), cur)));
            cur = mul(cur, eta);
        }
        if (!ok || pspan.rank() != dim_k_B) continue;
        // eta^D as an R-combination of lower powers -> the tail.
        FpMat P(p, cols, len * D);
        for (size_t i = 0; i < D; ++i)
            for (uint32_t d = 0; d < len; ++d) {
                AlgElem b = d == 0 ? powers[i] : scalar_mul(base.pi(), powers[i]);
                FpVec c = k_coords(A, b);
                for (size_t r = 0; r < cols; ++r) P.set(r, len * i + d, c[r]);
            }
        auto sol = P.solve(k_coords(A, cur));
        if (!sol) continue;
        RawPoly tail;
        for (size_t i = 0; i < D; ++i) {
            uint32_t c = (*sol)[len * i] + (len == 2 ? (*sol)[len * i + 1] * p : 0);
            if (c != 0) tail.push_back({Monomial{static_cast<uint16_t>(i)}, c});
        }
        bool const_term = false;
        for (auto& [mm, cc] : tail)
            if (mm[0] == 0 && cc != 0) const_term = true;
        if (const_term) continue;
        AlgebraPtr Bp;
        try {
            Bp = AlgebraPresentation::make(base, {"t"}, {static_cast<uint32_t>(D)}, {tail});
        } catch (const std::exception&) {
            continue;
        }
        // Comultiplication of eta expressed in the power basis of B (x) B.
        AlgebraPtr BT2 = tensor_power(Bp, 2);
        AlgElem d_eta = apply_comul(G, eta);
        FpMat Q(p, t2w, len * D * D);
        std::vector<std::vector<AlgElem>> prods(D, std::vector<AlgElem>(D));
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) {
                AlgElem prod = mul(embed(A, G.T2, 1, powers[i]), embed(A, G.T2, 2, powers[j]));
                prods[i][j] = prod;
                for (uint32_t d = 0; d < len; ++d) {
                    AlgElem b = d == 0 ? prod : scalar_mul(base.pi(), prod);
                    FpVec c = k_coords(G.T2, b);
                    for (size_t r = 0; r < t2w; ++r) Q.set(r, len * (i * D + j) + d, c[r]);
                }
            }
        auto dsol = Q.solve(k_coords(G.T2, d_eta));
        if (!dsol) continue;
        RawPoly comul_raw;
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) {
                uint32_t c = (*dsol)[len * (i * D + j)] +
                             (len == 2 ? (*dsol)[len * (i * D + j) + 1] * p : 0);
                if (c != 0)
                    comul_raw.push_back({Monomial{static_cast<uint16_t>(i),
                                                  static_cast<uint16_t>(j)}, c});
            }
        HopfPresentation BH = make_hopf(Bp, {normal_form(BT2, comul_raw)},
                                        {counit_eval(G, eta)}, std::nullopt);
        try {
            BH.antipode = solve_antipode(BH);
        } catch (const std::exception&) {
            continue;
        }
        if (!check_axioms(BH).all_pass()) continue;
        out.monogenic = true;
        out.eta = eta;
        out.induced = BH;
        break;
    }
    if (!out.monogenic) out.note = "no monogenic presentation found";
    return out;
}

FreenessReport free_over(const AlgebraPtr& A, const std::vector<AlgElem>& b_basis,
                         const std::vector<AlgElem>& module_gens) {
    const auto& base = A->base();
    if (base.kind() != RingKind::FpPi && base.length() != 1)
        throw std::invalid_argument("free_over: base must be F_p-linear");
    uint32_t p = base.p();
    uint32_t len = base.length();
    RowSpace bspan(p, k_width(A));
    for (const auto& b : b_basis) {
        bspan.insert(k_coords(A, b));
        if (len == 2) bspan.insert(k_coords(A, scalar_mul(base.pi(), b)));
    }
    RowSpace full(p, k_width(A));
    for (const auto& g : module_gens)
        for (const auto& b : b_basis) {
            AlgElem prod = mul(g, b);
            full.insert(k_coords(A, prod));
            if (len == 2) full.insert(k_coords(A, scalar_mul(base.pi(), prod)));
        }
    FreenessReport rep;
    rep.dim_k = full.rank();
    rep.dim_k_mod_m = bspan.rank();
    rep.rank = module_gens.size();
    rep.free = (full.rank() == k_width(A)) &&
               (module_gens.size() * bspan.rank() == full.rank());
    return rep;
}

FreenessReport is_free_module(const AlgebraPtr& A, const std::vector<AlgElem>& spanning) {
    const auto& base = A->base();
    if (base.kind() != RingKind::FpPi && base.length() != 1)
        throw std::invalid_argument("is_free_module: base must be F_p-linear");
    uint32_t p = base.p();
    uint32_t len = base.length();
    FreenessReport rep;
    RowSpace full(p, k_width(A));
    for (const auto& b : spanning) {
        full.insert(k_coords(A, b));
        if (len == 2) full.insert(k_coords(A, scalar_mul(base.pi(), b)));
    }
    rep.dim_k = full.rank();
    auto Ak = residue_algebra(A);
    RowSpace red(p, Ak->dimension());
    for (const auto& b : spanning) {
        FpVec v(Ak->dimension(), 0);
        AlgElem bk = residue_elem(Ak, b);
        auto basis = Ak->basis();
        for (size_t i = 0; i < basis.size(); ++i)
            v[i] = static_cast<uint8_t>(coefficient_of(bk, basis[i]));
        red.insert(v);
    }
    rep.dim_k_mod_m = red.rank();
    rep.rank = rep.dim_k_mod_m;
    rep.free = (static_cast<size_t>(len) * rep.dim_k_mod_m == rep.dim_k);
    return rep;
}

} // namespace ffgs
