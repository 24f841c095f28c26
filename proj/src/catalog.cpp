#include "ffgs/catalog.hpp"

namespace ffgs {

namespace {

// (1 + gen)^e inside A, e >= 0.
AlgElem one_plus_gen_pow(const AlgebraPtr& A, size_t gen, uint32_t e) {
    AlgElem base = add(alg_one(A), alg_gen(A, gen));
    return pow(base, e);
}

} // namespace

uint32_t v_p(uint32_t p, uint32_t n, uint32_t cap) {
    if (n == 0) return cap;
    uint32_t v = 0;
    while (n % p == 0 && v < cap) {
        n /= p;
        ++v;
    }
    return v;
}

uint32_t int_pow(uint32_t p, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        r *= p;
        if (r > 0x7fffffffULL) throw std::overflow_error("int_pow: overflow");
    }
    return static_cast<uint32_t>(r);
}

HopfPresentation alpha_p(const BaseRing& R) {
    auto A = AlgebraPresentation::make(R, {"x"}, {R.p()}, {RawPoly{}});
    auto T2 = tensor_power(A, 2);
    AlgElem dx = add(alg_gen(T2, 0), alg_gen(T2, 1)); // x(x)1 + 1(x)x
    HopfPresentation G = make_hopf(A, {dx}, {R.zero()});
    G.antipode = {neg(alg_gen(A, 0))};
    return G;
}

HopfPresentation mu_pm(const BaseRing& R, uint32_t m) {
    uint32_t d = int_pow(R.p(), m);
    auto A = AlgebraPresentation::make(R, {"y"}, {d}, {RawPoly{}});
    auto T2 = tensor_power(A, 2);
    AlgElem y1 = alg_gen(T2, 0), y2 = alg_gen(T2, 1);
    AlgElem dy = add(add(y1, y2), mul(y1, y2)); // 1+y group-like
    HopfPresentation G = make_hopf(A, {dy}, {R.zero()});
    G.antipode = {sub(inv(add(alg_one(A), alg_gen(A, 0))), alg_one(A))};
    return G;
}

HopfPresentation g_lambda(const BaseRing& R, uint32_t m, uint32_t lambda) {
    uint32_t pm = int_pow(R.p(), m);
    if (lambda == 0 || lambda >= pm)
        throw std::invalid_argument("g_lambda: lambda out of range [1, p^m - 1]");
    auto A = AlgebraPresentation::make(R, {"x", "y"}, {R.p(), pm},
                                       {RawPoly{}, RawPoly{}});
    auto T2 = tensor_power(A, 2);
    AlgElem x1 = alg_gen(T2, 0), y1 = alg_gen(T2, 1);
    AlgElem x2 = alg_gen(T2, 2), y2 = alg_gen(T2, 3);
    AlgElem dx = add(mul(one_plus_gen_pow(T2, 1, lambda), x2), x1);
    AlgElem dy = add(add(y1, y2), mul(y1, y2));
    HopfPresentation G = make_hopf(A, {dx, dy}, {R.zero(), R.zero()});
    AlgElem inv1y = inv(add(alg_one(A), alg_gen(A, 1)));
    G.antipode = {neg(mul(pow(inv1y, lambda), alg_gen(A, 0))),
                  sub(inv1y, alg_one(A))};
    return G;
}

std::vector<AlgElem> closed_form_power(const HopfPresentation& G, uint32_t lambda,
                                       uint32_t h) {
    const auto& A = G.A;
    uint32_t ph = int_pow(G.base().p(), h);
    AlgElem geom = alg_zero(A);
    for (uint32_t i = 0; i < ph; ++i)
        geom = add(geom, one_plus_gen_pow(A, 1, lambda * i));
    AlgElem xi = mul(alg_gen(A, 0), geom);
    AlgElem yi = sub(one_plus_gen_pow(A, 1, ph), alg_one(A));
    return {xi, yi};
}

HopfPresentation oort_tate(const BaseRing& R, uint32_t a, uint32_t b) {
    if (R.mul(R.from_int(a), R.from_int(b)) != R.from_int(R.p()))
        throw std::invalid_argument("oort_tate: a*b != p in R");
    RawPoly tail{{Monomial{1}, R.from_int(a)}};
    auto A = AlgebraPresentation::make(R, {"t"}, {R.p()}, {tail});
    auto T2 = tensor_power(A, 2);
    AlgElem t1 = alg_gen(T2, 0), t2 = alg_gen(T2, 1);
    AlgElem dt = add(add(t1, t2), scalar_mul(R.from_int(b), wp_polynomial(R.p(), t1, t2)));
    HopfPresentation G = make_hopf(A, {dt}, {R.zero()});
    G.antipode = solve_antipode(G);
    return G;
}

HopfPresentation tilde_h(const BaseRing& R, uint32_t m, uint32_t a) {
    if (R.length() != 2)
        throw std::invalid_argument("tilde_h: base must have a square-zero pi");
    uint32_t p = R.p();
    uint32_t lambda = int_pow(p, m - 1);
    HopfPresentation G0 = g_lambda(R, m, lambda);
    if (a % p == 0) return G0;
    const auto& T2 = G0.T2;
    uint32_t api = R.mul(R.from_int(a), R.pi());
    AlgElem x1 = alg_gen(T2, 0), y1 = alg_gen(T2, 1);
    AlgElem x2 = alg_gen(T2, 2), y2 = alg_gen(T2, 3);
    std::vector<AlgElem> comul = G0.comul;
    if (m == 1) {
        // Coboundary-shaped twist: the unique coassociative completion of the
        // first-coordinate x (x) x deformation at m = 1.
        comul[0] = add(comul[0], scalar_mul(api, mul(x1, x2)));
        comul[1] = add(comul[1], scalar_mul(api, mul(x1, y2)));
    } else {
        // Second-coordinate twist by the Witt carry cocycle; generates the
        // degree-2 adjoint class when v_p(lambda) = m - 1 >= 1.
        AlgElem u = x1;
        AlgElem v = mul(one_plus_gen_pow(T2, 1, lambda), x2);
        AlgElem frame = mul(add(alg_one(T2), y1), add(alg_one(T2), y2));
        comul[1] = add(comul[1], scalar_mul(api, mul(frame, wp_polynomial(p, u, v))));
    }
    HopfPresentation G = make_hopf(G0.A, comul, G0.counit);
    G.antipode = solve_antipode(G);
    return G;
}

HopfMorphism psi_u(const BaseRing& R, uint32_t m, uint32_t u) {
    if (u % R.p() == 0) throw std::invalid_argument("psi_u: u must be a unit mod p^m");
    HopfPresentation M = mu_pm(R, m);
    AlgElem img = sub(one_plus_gen_pow(M.A, 0, u), alg_one(M.A));
    return HopfMorphism{M, M, {img}};
}

HopfMorphism units_iso(const BaseRing& R, uint32_t m, uint32_t lambda, uint32_t u) {
    uint32_t pm = int_pow(R.p(), m);
    if (u % R.p() == 0) throw std::invalid_argument("units_iso: u must be a unit mod p^m");
    uint32_t target_lambda = static_cast<uint32_t>((static_cast<uint64_t>(u) * lambda) % pm);
    HopfPresentation S = g_lambda(R, m, lambda);
    HopfPresentation T = g_lambda(R, m, target_lambda);
    AlgElem x = alg_gen(T.A, 0);
    AlgElem y_img = sub(one_plus_gen_pow(T.A, 1, u), alg_one(T.A));
    return HopfMorphism{S, T, {x, y_img}};
}

} // namespace ffgs
