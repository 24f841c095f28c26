#include "ffgs/cohomology.hpp"

#include "ffgs/catalog.hpp"

#include <algorithm>

namespace ffgs {

ComoduleReport check_comodule(const Comodule& V) {
    ComoduleReport rep;
    const auto& G = V.G;
    const auto& A = G.A;
    auto note = [&](const std::string& w) {
        if (rep.witness.empty()) rep.witness = w;
    };
    rep.counit_ok = true;
    for (size_t i = 0; i < V.rank; ++i)
        for (size_t j = 0; j < V.rank; ++j) {
            uint32_t want = i == j ? G.base().one() : G.base().zero();
            if (counit_eval(G, V.action[i][j]) != want) {
                rep.counit_ok = false;
                note("counit axiom fails at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
            }
        }
    rep.coassoc_ok = true;
    for (size_t i = 0; i < V.rank; ++i)
        for (size_t j = 0; j < V.rank; ++j) {
            AlgElem lhs = apply_comul(G, V.action[i][j]);
            AlgElem rhs = alg_zero(G.T2);
            for (size_t k = 0; k < V.rank; ++k)
                rhs = add(rhs, mul(embed_in_slot(A, G.T2, 1, V.action[i][k]),
                                   embed_in_slot(A, G.T2, 2, V.action[k][j])));
            if (lhs != rhs) {
                rep.coassoc_ok = false;
                note("coaction square fails at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
            }
        }
    return rep;
}

Comodule trivial_rep(const HopfPresentation& G, size_t rank) {
    Comodule V{G, rank, {}, "trivial"};
    V.action.assign(rank, std::vector<AlgElem>(rank, alg_zero(G.A)));
    for (size_t i = 0; i < rank; ++i) V.action[i][i] = alg_one(G.A);
    return V;
}

Comodule character_rep(const HopfPresentation& G, const AlgElem& group_like,
                       const std::string& name) {
    return Comodule{G, 1, {{group_like}}, name};
}

Comodule vbar_rep(const HopfPresentation& G, uint32_t lambda) {
    if (G.A->gen_count() != 2)
        throw std::invalid_argument("vbar_rep: expects a two-generator presentation");
    AlgElem w = pow(add(alg_one(G.A), alg_gen(G.A, 1)), lambda * G.base().p());
    Comodule V{G, 2, {}, "vbar"};
    V.action = {{w, alg_zero(G.A)}, {alg_zero(G.A), alg_one(G.A)}};
    return V;
}

Comodule adjoint_rep(const HopfPresentation& G) {
    const auto& A = G.A;
    const auto& base = G.base();
    size_t n = A->gen_count();
    for (const auto& t : A->tails())
        for (const auto& [m, c] : t.terms()) {
            uint32_t deg = 0;
            for (auto e : m) deg += e;
            if (deg < 2)
                throw std::invalid_argument(
                    "adjoint_rep: tails with terms of degree < 2 unsupported");
        }
    std::vector<AlgElem> antipode =
        G.antipode ? *G.antipode : solve_antipode(G);

    // A (x) k[z]/(z_i^2), with cross terms z_i z_j killed by truncation.
    std::vector<std::string> names = A->names();
    std::vector<uint32_t> bounds = A->bounds();
    std::vector<RawPoly> tails;
    for (const auto& t : A->tails()) {
        RawPoly padded;
        for (const auto& [m, c] : t.terms()) {
            Monomial mm(2 * n, 0);
            std::copy(m.begin(), m.end(), mm.begin());
            padded.emplace_back(std::move(mm), c);
        }
        tails.push_back(std::move(padded));
    }
    for (size_t i = 0; i < n; ++i) {
        names.push_back("z" + std::to_string(i + 1));
        bounds.push_back(2);
        tails.push_back(RawPoly{});
    }
    AlgebraPtr AZ = AlgebraPresentation::make(base, names, bounds, tails);

    auto z_degree = [n](const Monomial& m) {
        uint32_t d = 0;
        for (size_t i = n; i < m.size(); ++i) d += m[i];
        return d;
    };
    auto truncate = [&](const AlgElem& e) {
        RawPoly kept;
        for (const auto& [m, c] : e.terms())
            if (z_degree(m) < 2) kept.emplace_back(m, c);
        return normal_form(AZ, kept);
    };
    auto compose = [&](const std::vector<AlgElem>& P, const std::vector<AlgElem>& Q) {
        std::vector<AlgElem> images = P;
        images.insert(images.end(), Q.begin(), Q.end());
        std::vector<AlgElem> out;
        for (size_t i = 0; i < n; ++i)
            out.push_back(truncate(substitute(AZ, images, G.comul[i])));
        return out;
    };

    std::vector<AlgElem> g_pt, h_pt, ginv_pt;
    for (size_t i = 0; i < n; ++i) {
        g_pt.push_back(alg_gen(AZ, i));
        h_pt.push_back(add(alg_scalar(AZ, G.counit[i]), alg_gen(AZ, n + i)));
    }
    for (size_t i = 0; i < n; ++i)
        ginv_pt.push_back(substitute(AZ, g_pt, antipode[i]));
    std::vector<AlgElem> q = compose(g_pt, compose(h_pt, ginv_pt));

    // q_i = eps_i + sum_j M_ij z_j; anything else would mean the conjugate of
    // an infinitesimal point failed to stay infinitesimal.
    Comodule V{G, n, {}, "adjoint"};
    V.action.assign(n, std::vector<AlgElem>(n, alg_zero(A)));
    for (size_t i = 0; i < n; ++i) {
        for (const auto& [m, c] : q[i].terms()) {
            if (z_degree(m) == 0) {
                Monomial empty(2 * n, 0);
                if (m != empty || c != G.counit[i])
                    throw std::runtime_error("adjoint_rep: non-infinitesimal conjugate");
                continue;
            }
            size_t j = n;
            for (size_t t = n; t < 2 * n; ++t)
                if (m[t] == 1) j = t - n;
            Monomial am(m.begin(), m.begin() + n);
            V.action[i][j] = add(V.action[i][j],
                                 alg_monomial(A, am, c));
        }
    }
    return V;
}

CochainComplex::CochainComplex(Comodule V, uint64_t budget)
    : V_(std::move(V)), budget_(budget) {}

const AlgebraPtr& CochainComplex::space(uint32_t n) {
    while (spaces_.size() <= n)
        spaces_.push_back(tensor_power(V_.G.A, static_cast<uint32_t>(spaces_.size())));
    return spaces_[n];
}

size_t CochainComplex::width(uint32_t n) { return V_.rank * k_width(space(n)); }

Cochain CochainComplex::zero(uint32_t n) {
    return Cochain(V_.rank, alg_zero(space(n)));
}

Cochain CochainComplex::apply_d(uint32_t n, const Cochain& f) {
    const auto& G = V_.G;
    const auto& A = G.A;
    const AlgebraPtr& Tn = space(n);
    const AlgebraPtr& Tn1 = space(n + 1);
    size_t gA = A->gen_count();
    Cochain out = zero(n + 1);

    std::vector<AlgElem> shift_imgs, keep_imgs;
    for (uint32_t t = 0; t < n; ++t)
        for (size_t g = 0; g < gA; ++g) {
            shift_imgs.push_back(alg_gen(Tn1, (t + 1) * gA + g));
            keep_imgs.push_back(alg_gen(Tn1, t * gA + g));
        }

    // Coaction into slot 1.
    for (size_t r = 0; r < V_.rank; ++r) {
        AlgElem shifted = substitute(Tn1, shift_imgs, f[r]);
        if (shifted.is_zero()) continue;
        for (size_t i = 0; i < V_.rank; ++i) {
            if (V_.action[i][r].is_zero()) continue;
            out[i] = add(out[i], mul(embed_in_slot(A, Tn1, 1, V_.action[i][r]), shifted));
        }
    }
    // Delta on inner slots, alternating signs.
    for (uint32_t s = 1; s <= n; ++s)
        for (size_t r = 0; r < V_.rank; ++r) {
            if (f[r].is_zero()) continue;
            AlgElem t = apply_comul_slot(G, Tn, Tn1, n, s, f[r]);
            out[r] = (s % 2 == 1) ? sub(out[r], t) : add(out[r], t);
        }
    // Unit appended on the right, sign (-1)^{n+1}.
    for (size_t r = 0; r < V_.rank; ++r) {
        if (f[r].is_zero()) continue;
        AlgElem t = substitute(Tn1, keep_imgs, f[r]);
        out[r] = ((n + 1) % 2 == 1) ? sub(out[r], t) : add(out[r], t);
    }
    return out;
}

FpVec CochainComplex::coords(uint32_t n, const Cochain& f) {
    const AlgebraPtr& Tn = space(n);
    size_t w = k_width(Tn);
    FpVec v(V_.rank * w, 0);
    for (size_t r = 0; r < V_.rank; ++r) {
        FpVec c = k_coords(Tn, f[r]);
        std::copy(c.begin(), c.end(), v.begin() + r * w);
    }
    return v;
}

Cochain CochainComplex::from_coords(uint32_t n, const FpVec& v) {
    const AlgebraPtr& Tn = space(n);
    size_t w = k_width(Tn);
    if (v.size() != V_.rank * w)
        throw std::invalid_argument("from_coords: width mismatch");
    Cochain f = zero(n);
    for (size_t r = 0; r < V_.rank; ++r)
        f[r] = from_k_coords(Tn, FpVec(v.begin() + r * w, v.begin() + (r + 1) * w));
    return f;
}

const FpMat& CochainComplex::matrix(uint32_t n) {
    auto it = matrices_.find(n);
    if (it != matrices_.end()) return it->second;
    size_t wn = width(n), wn1 = width(n + 1);
    FpMat D(V_.G.base().p(), wn1, wn, budget_);
    FpVec e(wn, 0);
    for (size_t c = 0; c < wn; ++c) {
        e[c] = 1;
        FpVec col = coords(n + 1, apply_d(n, from_coords(n, e)));
        e[c] = 0;
        for (size_t r = 0; r < wn1; ++r)
            if (col[r]) D.set(r, c, col[r]);
    }
    return matrices_.emplace(n, std::move(D)).first->second;
}

CohomologyResult cohomology(const Comodule& V, uint32_t degree, uint64_t budget,
                            const std::optional<Cochain>& probe,
                            const std::string& probe_flag) {
    CochainComplex C(V, budget);
    uint32_t p = V.G.base().p();
    CohomologyResult res;
    res.degree = degree;

    const FpMat& Dn = C.matrix(degree);
    std::vector<FpVec> kernel = Dn.kernel_basis();
    res.dim_kernel = kernel.size();

    RowSpace image(p, C.width(degree));
    if (degree > 0) {
        const FpMat& Dprev = C.matrix(degree - 1);
        size_t wn = C.width(degree), wp = C.width(degree - 1);
        for (size_t c = 0; c < wp; ++c) {
            FpVec col(wn, 0);
            for (size_t r = 0; r < wn; ++r) col[r] = Dprev.at(r, c);
            image.insert(col);
        }
    }
    res.dim_image = image.rank();
    res.dim_h = res.dim_kernel - res.dim_image;

    RowSpace quo(p, C.width(degree));
    for (const auto& v : kernel) {
        FpVec reduced = image.reduce(v);
        if (fp_vec_is_zero(reduced)) continue;
        if (quo.insert(reduced)) {
            res.representatives.push_back(C.from_coords(degree, reduced));
            res.flags.emplace_back();
        }
    }
    if (probe) {
        for (size_t i = 0; i < res.representatives.size(); ++i) {
            Cochain diff = res.representatives[i];
            for (size_t r = 0; r < diff.size(); ++r) diff[r] = sub(diff[r], (*probe)[r]);
            if (is_coboundary(V, degree, diff, budget)) res.flags[i] = probe_flag;
        }
    }
    return res;
}

bool is_cocycle(const Comodule& V, uint32_t degree, const Cochain& f,
                uint64_t budget) {
    CochainComplex C(V, budget);
    Cochain d = C.apply_d(degree, f);
    for (const auto& comp : d)
        if (!comp.is_zero()) return false;
    return true;
}

std::optional<Cochain> is_coboundary(const Comodule& V, uint32_t degree,
                                     const Cochain& f, uint64_t budget) {
    if (degree == 0) return std::nullopt;
    CochainComplex C(V, budget);
    const FpMat& Dprev = C.matrix(degree - 1);
    auto sol = Dprev.solve(C.coords(degree, f));
    if (!sol) return std::nullopt;
    return C.from_coords(degree - 1, *sol);
}

Cochain wp_class_cochain(const Comodule& V, uint32_t lambda, size_t slot) {
    const auto& A = V.G.A;
    AlgebraPtr T2 = tensor_power(A, 2);
    size_t n = A->gen_count();
    AlgElem u = alg_gen(T2, 0), v = alg_zero(T2);
    if (n == 1) {
        v = alg_gen(T2, 1);
    } else {
        AlgElem frame = pow(add(alg_one(T2), alg_gen(T2, 1)), lambda);
        v = mul(frame, alg_gen(T2, n));
    }
    AlgElem w = wp_polynomial(V.G.base().p(), u, v);
    Cochain f(V.rank, alg_zero(T2));
    f.at(slot) = w;
    return f;
}

DiagInvariantsResult diagonalizable_invariants(const HopfPresentation& G,
                                               uint32_t lambda, const Comodule& V,
                                               uint32_t degree, uint64_t budget) {
    const auto& base = G.base();
    if (base.length() != 1)
        throw std::invalid_argument("diagonalizable_invariants: field base required");
    if (G.A->gen_count() != 2)
        throw std::invalid_argument("diagonalizable_invariants: expects x,y generators");
    uint32_t p = base.p();
    uint32_t pm = G.A->bounds()[1];

    // Weights of V under the diagonalizable quotient: rho with x -> 0 must be
    // diagonal with group-like powers (1+y)^{w_r} on the diagonal.
    std::vector<AlgElem> mu_only = {alg_zero(G.A), alg_gen(G.A, 1)};
    std::vector<uint32_t> weights(V.rank, 0);
    std::vector<AlgElem> powers;
    {
        AlgElem one_y = add(alg_one(G.A), alg_gen(G.A, 1));
        AlgElem cur = alg_one(G.A);
        for (uint32_t j = 0; j < pm; ++j) {
            powers.push_back(cur);
            cur = mul(cur, one_y);
        }
    }
    for (size_t i = 0; i < V.rank; ++i)
        for (size_t j = 0; j < V.rank; ++j) {
            AlgElem red = substitute(G.A, mu_only, V.action[i][j]);
            if (i != j) {
                if (!red.is_zero())
                    throw std::invalid_argument(
                        "diagonalizable_invariants: coaction not diagonal mod x");
                continue;
            }
            bool found = false;
            for (uint32_t w = 0; w < pm; ++w)
                if (red == powers[w]) {
                    weights[i] = w;
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument(
                    "diagonalizable_invariants: diagonal entry not group-like");
        }

    // Restriction to N = alpha_p: one generator, coaction with y -> 0.
    HopfPresentation N = alpha_p(base);
    Comodule VN{N, V.rank, {}, V.name + "|N"};
    std::vector<AlgElem> n_only = {alg_gen(N.A, 0), alg_zero(N.A)};
    VN.action.assign(V.rank, std::vector<AlgElem>(V.rank, alg_zero(N.A)));
    for (size_t i = 0; i < V.rank; ++i)
        for (size_t j = 0; j < V.rank; ++j)
            VN.action[i][j] = substitute(N.A, n_only, V.action[i][j]);

    CochainComplex C(VN, budget);
    std::map<uint32_t, std::vector<Monomial>> basis_cache;
    auto basis_of = [&](uint32_t n) -> const std::vector<Monomial>& {
        auto it = basis_cache.find(n);
        if (it == basis_cache.end())
            it = basis_cache.emplace(n, C.space(n)->basis()).first;
        return it->second;
    };
    auto weight_of = [&](uint32_t n, size_t col, int sign) {
        size_t dim = C.space(n)->dimension();
        size_t r = col / dim, mono_idx = col % dim;
        const Monomial& m = basis_of(n)[mono_idx];
        int64_t deg = 0;
        for (auto e : m) deg += e;
        int64_t w = weights[r] + sign * static_cast<int64_t>(lambda) * deg;
        w %= static_cast<int64_t>(pm);
        if (w < 0) w += pm;
        return static_cast<uint32_t>(w);
    };
    auto zero_cols = [&](uint32_t n, int sign) {
        std::vector<size_t> cols;
        for (size_t c = 0; c < C.width(n); ++c)
            if (weight_of(n, c, sign) == 0) cols.push_back(c);
        return cols;
    };
    auto leakage_free = [&](uint32_t n, int sign) {
        const FpMat& D = C.matrix(n);
        auto cols = zero_cols(n, sign);
        for (size_t c : cols)
            for (size_t r = 0; r < C.width(n + 1); ++r)
                if (D.at(r, c) != 0 && weight_of(n + 1, r, sign) != 0) return false;
        return true;
    };

    int sign = 0;
    for (int s : {+1, -1}) {
        bool ok = leakage_free(degree, s);
        if (ok && degree > 0) ok = leakage_free(degree - 1, s);
        if (ok) {
            sign = s;
            break;
        }
    }
    if (sign == 0)
        throw std::runtime_error(
            "diagonalizable_invariants: weight grading not respected by d");

    auto restrict_matrix = [&](uint32_t n) {
        const FpMat& D = C.matrix(n);
        auto cols = zero_cols(n, sign);
        auto rows = zero_cols(n + 1, sign);
        FpMat R(p, rows.size(), cols.size());
        for (size_t ci = 0; ci < cols.size(); ++ci)
            for (size_t ri = 0; ri < rows.size(); ++ri)
                R.set(ri, ci, D.at(rows[ri], cols[ci]));
        return R;
    };

    DiagInvariantsResult out;
    out.degree = degree;
    out.weight_sign = sign;
    out.subcomplex_dim = zero_cols(degree, sign).size();
    FpMat Dn = restrict_matrix(degree);
    size_t ker = Dn.cols() - Dn.rank();
    size_t im = 0;
    if (degree > 0) im = restrict_matrix(degree - 1).rank();
    out.dim = ker - im;
    return out;
}

} // namespace ffgs
