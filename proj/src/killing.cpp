#include "spincons/killing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace spincons {

namespace {

Vec4 unit_vec(int mu) {
    Vec4 v;
    v[mu] = 1.0;
    return v;
}

SymSpinor scalar_one() {
    SymSpinor s(0, 0);
    s.at(0, 0) = 1.0;
    return s;
}

// x^{A}_{~B'} (primed index lowered): m[A][0'] = -g[A][1'], m[A][1'] = g[A][0'].
SymSpinor lower_primed_11(const SymSpinor& g) {
    SymSpinor m(1, 1);
    m.at(0, 0) = -g.at(0, 1);
    m.at(0, 1) = g.at(0, 0);
    m.at(1, 0) = -g.at(1, 1);
    m.at(1, 1) = g.at(1, 0);
    return m;
}

// x^{A'}_{~B} (unprimed index lowered): n[0][A'] = -g[1][A'], n[1][A'] = g[0][A'].
SymSpinor lower_unprimed_11(const SymSpinor& g) {
    SymSpinor m(1, 1);
    m.at(0, 0) = -g.at(1, 0);
    m.at(0, 1) = -g.at(1, 1);
    m.at(1, 0) = g.at(0, 0);
    m.at(1, 1) = g.at(0, 1);
    return m;
}

SpinorPoly map_coeffs(const SpinorPoly& p, SymSpinor (*f)(const SymSpinor&)) {
    SpinorPoly r(p.p(), p.q());
    for (const auto& [k, c] : p.terms()) r.add_term(MultiDeg::from_key(k), f(c));
    return r;
}

} // namespace

SpinorPoly coordinate_spinor_poly() {
    SpinorPoly x(1, 1);
    for (int mu = 0; mu < 4; ++mu) {
        MultiDeg d;
        d.e[mu] = 1;
        x.add_term(d, vector_spinor(unit_vec(mu)));
    }
    return x;
}

KillingSpinor ckv(const SymSpinor& a1, cplx a2, const SymSpinor& a3, const SymSpinor& a4,
                  const SymSpinor& a5) {
    if (a1.p() != 1 || a1.q() != 1 || a3.p() != 0 || a3.q() != 2 || a4.p() != 2 ||
        a4.q() != 0 || a5.p() != 1 || a5.q() != 1)
        throw std::invalid_argument("ckv: parameter valences must be (1,1),(0,2),(2,0),(1,1)");

    SpinorPoly x = coordinate_spinor_poly();
    SpinorPoly xpl = map_coeffs(x, lower_primed_11);    // x^A_{~B'}
    SpinorPoly xul = map_coeffs(x, lower_unprimed_11);  // x^{A'}_{~B}

    SpinorPoly xi = SpinorPoly::constant(a1);
    xi += x * a2;
    // a3^{A'B'} x^A_{~B'}
    xi += combine_poly(SpinorPoly::constant(a3), xpl, 0, 1, kDelta, kDelta);
    // a4^{AB} x^{A'}_{~B}
    xi += combine_poly(SpinorPoly::constant(a4), xul, 1, 0, kDelta, kDelta);
    // special conformal block 2 (a5 . x) x^{AA'} - (x . x) a5^{AA'},
    // with a5 the (complex) parameter vector given as an upper (1,1) grid
    if (a5.max_norm() > 0.0) {
        SpinorPoly xsq(0, 0);
        for (int mu = 0; mu < 4; ++mu) {
            double sgn = (mu == 0) ? 1.0 : -1.0;
            xsq += combine_poly(SpinorPoly::coord(mu), SpinorPoly::coord(mu), 0, 0, kEps, kEps) * sgn;
        }
        SpinorPoly bdotx =
            combine_poly(SpinorPoly::constant(lower_all(a5)), x, 1, 1, kDelta, kDelta);
        xi += combine_poly(bdotx * 2.0, x, 0, 0, kEps, kEps);
        xi += combine_poly(xsq * -1.0, SpinorPoly::constant(a5), 0, 0, kEps, kEps);
    }
    xi.prune();

    KillingSpinor ks;
    ks.k = 1;
    ks.l = 1;
    ks.poly = xi;
    return ks;
}

KillingSpinor cky(const SymSpinor& b1, const SymSpinor& b2, const SymSpinor& b3) {
    if (b1.p() != 0 || b1.q() != 2 || b2.p() != 1 || b2.q() != 1 || b3.p() != 2 || b3.q() != 0)
        throw std::invalid_argument("cky: parameter valences must be (0,2),(1,1),(2,0)");

    SpinorPoly x = coordinate_spinor_poly();
    SpinorPoly xul = map_coeffs(x, lower_unprimed_11);  // x^{B'}_{~A}

    SpinorPoly Y = SpinorPoly::constant(b1);
    // b2^{A(A'} x^{B')}_{~A}
    Y += combine_poly(SpinorPoly::constant(b2), xul, 1, 0, kDelta, kDelta);
    // b3^{AB} x^{A'}_{~A} x^{B'}_{~B}
    SpinorPoly w = combine_poly(SpinorPoly::constant(b3), xul, 1, 0, kDelta, kDelta);
    Y += combine_poly(w, xul, 1, 0, kDelta, kDelta);
    Y.prune();

    KillingSpinor ks;
    ks.k = 0;
    ks.l = 2;
    ks.poly = Y;
    return ks;
}

KillingSpinor ks_product(std::span<const KillingSpinor> factors) {
    if (factors.empty()) throw std::invalid_argument("ks_product: empty factor list");
    KillingSpinor r = factors[0];
    bool real = factors[0].is_real;
    for (size_t i = 1; i < factors.size(); ++i) {
        r.poly = combine_poly(r.poly, factors[i].poly, 0, 0, kEps, kEps);
        r.k += factors[i].k;
        r.l += factors[i].l;
        real = real && factors[i].is_real;
    }
    r.is_real = real && (r.k == r.l);
    r.is_self_dual_cky = (r.k == 0 && r.l == 2 && factors.size() == 1 && factors[0].is_self_dual_cky);
    r.label.clear();
    return r;
}

KillingSpinor ks_product(const KillingSpinor& a, const KillingSpinor& b) {
    std::array<KillingSpinor, 2> f{a, b};
    return ks_product(std::span<const KillingSpinor>(f));
}

SpinorPoly killing_residual_poly(const KillingSpinor& ks) {
    // all indices lowered, then d_{BB'} appended and both groups symmetrized
    SpinorPoly low = map_coeffs(ks.poly, +[](const SymSpinor& c) { return lower_all(c); });
    std::array<std::array<SpinorPoly, 2>, 2> d;
    for (int B = 0; B < 2; ++B)
        for (int Bp = 0; Bp < 2; ++Bp) d[B][Bp] = poly_deriv_AA(low, B, Bp);

    auto merge_p = [](const SpinorPoly& g0, const SpinorPoly& g1) {
        SpinorPoly out(g0.p(), g0.q() + 1);
        for (const auto& [k, c] : g0.terms())
            out.add_term(MultiDeg::from_key(k), merge_primed(c, SymSpinor(c.p(), c.q())));
        for (const auto& [k, c] : g1.terms())
            out.add_term(MultiDeg::from_key(k), merge_primed(SymSpinor(c.p(), c.q()), c));
        out.prune();
        return out;
    };
    auto merge_u = [](const SpinorPoly& g0, const SpinorPoly& g1) {
        SpinorPoly out(g0.p() + 1, g0.q());
        for (const auto& [k, c] : g0.terms())
            out.add_term(MultiDeg::from_key(k), merge_unprimed(c, SymSpinor(c.p(), c.q())));
        for (const auto& [k, c] : g1.terms())
            out.add_term(MultiDeg::from_key(k), merge_unprimed(SymSpinor(c.p(), c.q()), c));
        out.prune();
        return out;
    };
    SpinorPoly r0 = merge_p(d[0][0], d[0][1]);
    SpinorPoly r1 = merge_p(d[1][0], d[1][1]);
    return merge_u(r0, r1);
}

double killing_residual(const KillingSpinor& ks, const Point4& x) {
    SpinorPoly res = killing_residual_poly(ks);
    double scale = std::max(1.0, ks.poly.eval(x).max_norm());
    return res.eval(x).max_norm() / scale;
}

CkvDecomp ckv_decompose(const KillingSpinor& zeta) {
    if (zeta.k != 1 || zeta.l != 1) throw std::invalid_argument("ckv_decompose: not type (1,1)");
    SpinorPoly low = map_coeffs(zeta.poly, +[](const SymSpinor& c) { return lower_all(c); });

    // d[A][A'][B][B'] = d_{AA'} zeta_{BB'} as scalar polys
    SpinorPoly d[2][2][2][2];
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) {
            SpinorPoly dz = poly_deriv_AA(low, A, Ap);
            for (int B = 0; B < 2; ++B)
                for (int Bp = 0; Bp < 2; ++Bp) d[A][Ap][B][Bp] = poly_component(dz, B, Bp);
        }

    CkvDecomp out;
    // theta = d_{AA'} zeta^{AA'}
    {
        SpinorPoly th(0, 0);
        for (int A = 0; A < 2; ++A)
            for (int Ap = 0; Ap < 2; ++Ap) {
                SpinorPoly dz = poly_deriv_AA(zeta.poly, A, Ap);
                th += poly_component(dz, A, Ap);
            }
        th.prune();
        out.theta = th;
    }
    // N_{AB} = eps^{A'B'} d_{AA'} zeta_{BB'}; lambda_{AB} = (N_{AB}+N_{BA})/4
    {
        SpinorPoly N[2][2];
        for (int A = 0; A < 2; ++A)
            for (int B = 0; B < 2; ++B) N[A][B] = d[A][0][B][1] - d[A][1][B][0];
        SpinorPoly lam(2, 0);
        auto put = [&](int idx, const SpinorPoly& s) {
            for (const auto& [k, c] : s.terms()) {
                SymSpinor g(2, 0);
                g.at(idx) = c.at(0, 0);
                lam.add_term(MultiDeg::from_key(k), g);
            }
        };
        put(0, (N[0][0] + N[0][0]) * 0.25);
        put(1, (N[0][1] + N[1][0]) * 0.25);
        put(2, (N[1][1] + N[1][1]) * 0.25);
        lam.prune();
        out.lambda = lam;
    }
    // N'_{A'B'} = eps^{AB} d_{AA'} zeta_{BB'}; lambdabar = sym/4
    {
        SpinorPoly N[2][2];
        for (int Ap = 0; Ap < 2; ++Ap)
            for (int Bp = 0; Bp < 2; ++Bp) N[Ap][Bp] = d[0][Ap][1][Bp] - d[1][Ap][0][Bp];
        SpinorPoly lam(0, 2);
        auto put = [&](int idx, const SpinorPoly& s) {
            for (const auto& [k, c] : s.terms()) {
                SymSpinor g(0, 2);
                g.at(0, idx) = c.at(0, 0);
                lam.add_term(MultiDeg::from_key(k), g);
            }
        };
        put(0, (N[0][0] + N[0][0]) * 0.25);
        put(1, (N[0][1] + N[1][0]) * 0.25);
        put(2, (N[1][1] + N[1][1]) * 0.25);
        lam.prune();
        out.lambda_bar = lam;
    }
    return out;
}

KillingSpinor lie_killing(const KillingSpinor& ks, const KillingSpinor& zeta) {
    if (zeta.k != 1 || zeta.l != 1) throw std::invalid_argument("lie_killing: zeta not type (1,1)");
    {
        Point4 probe{0.31, -0.77, 0.53, 0.11};
        if (killing_residual(zeta, probe) > 1e-8)
            throw std::domain_error("lie_killing: zeta is not a conformal Killing vector");
    }
    CkvDecomp dec = ckv_decompose(zeta);

    // transport term zeta^{BB'} d_{BB'} kappa
    SpinorPoly out(ks.k, ks.l);
    for (int B = 0; B < 2; ++B)
        for (int Bp = 0; Bp < 2; ++Bp) {
            SpinorPoly comp = poly_component(zeta.poly, B, Bp);
            if (comp.empty()) continue;
            SpinorPoly dk = poly_deriv_AA(ks.poly, B, Bp);
            out += combine_poly(comp, dk, 0, 0, kEps, kEps);
        }
    // rotation terms on upper indices
    out += rotate_poly_upper_unprimed(ks.poly, dec.lambda);
    out += rotate_poly_upper_primed(ks.poly, dec.lambda_bar);
    // weight -(k+l)/8 theta per the upper-index Leibniz convention
    double w = -double(ks.k + ks.l) / 8.0;
    out += combine_poly(dec.theta * w, ks.poly, 0, 0, kEps, kEps);
    out.prune();

    KillingSpinor r;
    r.k = ks.k;
    r.l = ks.l;
    r.poly = out;
    return r;
}

KillingSpinor ckv_bracket(const KillingSpinor& z1, const KillingSpinor& z2) {
    auto directional = [](const KillingSpinor& a, const KillingSpinor& b) {
        // a^{BB'} d_{BB'} b^{AA'}
        SpinorPoly out(1, 1);
        for (int B = 0; B < 2; ++B)
            for (int Bp = 0; Bp < 2; ++Bp) {
                SpinorPoly comp = poly_component(a.poly, B, Bp);
                if (comp.empty()) continue;
                out += combine_poly(comp, poly_deriv_AA(b.poly, B, Bp), 0, 0, kEps, kEps);
            }
        return out;
    };
    KillingSpinor r;
    r.k = 1;
    r.l = 1;
    r.poly = directional(z1, z2) - directional(z2, z1);
    r.poly.prune();
    return r;
}

std::vector<KillingSpinor> ckv_generators() {
    std::vector<KillingSpinor> out;
    SymSpinor z02(0, 2), z20(2, 0), z11(1, 1);

    const char* names[4] = {"P_t", "P_x", "P_y", "P_z"};
    for (int mu = 0; mu < 4; ++mu) {
        KillingSpinor g = ckv(vector_spinor(unit_vec(mu)), 0, z02, z20, z11);
        g.is_real = true;
        g.label = names[mu];
        out.push_back(g);
    }
    // rotations/boosts: a3 = beta with a4 = conj(beta) keeps xi Hermitian
    SymSpinor basis02[3];
    for (int idx = 0; idx < 3; ++idx) {
        basis02[idx] = SymSpinor(0, 2);
        basis02[idx].at(0, idx) = 1.0;
    }
    for (int idx = 0; idx < 3; ++idx)
        for (int phase = 0; phase < 2; ++phase) {
            SymSpinor beta = basis02[idx] * (phase ? cplx(0, 1) : cplx(1));
            KillingSpinor g = ckv(z11, 0, beta, conjugate(beta), z11);
            g.is_real = true;
            g.label = std::string("M_") + std::to_string(idx) + (phase ? "i" : "r");
            out.push_back(g);
        }
    {
        KillingSpinor g = ckv(z11, 1.0, z02, z20, z11);
        g.is_real = true;
        g.label = "D";
        out.push_back(g);
    }
    const char* knames[4] = {"K_t", "K_x", "K_y", "K_z"};
    for (int mu = 0; mu < 4; ++mu) {
        KillingSpinor g = ckv(z11, 0, z02, z20, vector_spinor(unit_vec(mu)));
        g.is_real = true;
        g.label = knames[mu];
        out.push_back(g);
    }
    return out;
}

std::vector<KillingSpinor> cky_generators() {
    std::vector<KillingSpinor> out;
    SymSpinor z02(0, 2), z20(2, 0), z11(1, 1);
    for (int idx = 0; idx < 3; ++idx) {
        SymSpinor b1(0, 2);
        b1.at(0, idx) = 1.0;
        KillingSpinor g = cky(b1, z11, z20);
        g.label = "Y1_" + std::to_string(idx);
        out.push_back(g);
    }
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            SymSpinor b2(1, 1);
            b2.at(a, b) = 1.0;
            KillingSpinor g = cky(z02, b2, z20);
            g.label = "Y2_" + std::to_string(a) + std::to_string(b);
            out.push_back(g);
        }
    for (int idx = 0; idx < 3; ++idx) {
        SymSpinor b3(2, 0);
        b3.at(idx) = 1.0;
        KillingSpinor g = cky(z02, z11, b3);
        g.label = "Y3_" + std::to_string(idx);
        out.push_back(g);
    }
    for (auto& g : out) g.is_self_dual_cky = true;
    return out;
}

std::vector<uint32_t> killing_monomial_dictionary(std::span<const KillingSpinor> list) {
    std::set<uint32_t> keys;
    for (const auto& ks : list)
        for (const auto& [k, c] : ks.poly.terms()) keys.insert(k);
    return {keys.begin(), keys.end()};
}

std::vector<cplx> killing_coeff_vector(const KillingSpinor& ks,
                                       const std::vector<uint32_t>& monomials) {
    const int ncomp = (ks.k + 1) * (ks.l + 1);
    std::vector<cplx> v(monomials.size() * ncomp, cplx(0));
    for (size_t mi = 0; mi < monomials.size(); ++mi) {
        auto it = ks.poly.terms().find(monomials[mi]);
        if (it == ks.poly.terms().end()) continue;
        int slot = 0;
        for (int i = 0; i <= ks.k; ++i)
            for (int j = 0; j <= ks.l; ++j) v[mi * ncomp + slot++] = it->second.at(i, j);
    }
    return v;
}

namespace {

// multiset enumeration: all non-decreasing index tuples of length n from [0,count)
void multisets(int count, int n, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(n, 0);
    if (n == 0) {
        out.push_back({});
        return;
    }
    while (true) {
        out.push_back(cur);
        int pos = n - 1;
        while (pos >= 0 && cur[pos] == count - 1) --pos;
        if (pos < 0) break;
        int v = cur[pos] + 1;
        for (int i = pos; i < n; ++i) cur[i] = v;
    }
}

struct GramSchmidt {
    std::vector<std::vector<cplx>> basis;
    double tol;

    //! Returns true when v was independent (and absorbed into the basis).
    bool offer(std::vector<cplx> v) {
        double n0 = norm(v);
        if (n0 == 0.0) return false;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) {
                cplx proj = dot(b, v);
                for (size_t i = 0; i < v.size(); ++i) v[i] -= proj * b[i];
            }
        double n1 = norm(v);
        if (n1 <= tol * n0) return false;
        for (auto& c : v) c /= n1;
        basis.push_back(std::move(v));
        return true;
    }
    static double norm(const std::vector<cplx>& v) {
        double s = 0;
        for (const auto& c : v) s += std::norm(c);
        return std::sqrt(s);
    }
    static cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
        cplx s(0);
        for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
        return s;
    }
};

} // namespace

std::vector<KillingSpinor> killing_basis(int k, int twol, int max_kl, double rank_tol) {
    if (twol % 2) throw std::invalid_argument("killing_basis: type gap must be even");
    int l = twol / 2;
    if (k < 0 || l < 0) throw std::invalid_argument("killing_basis: negative valence");
    if (k + l > max_kl)
        throw std::length_error("killing_basis: k+l exceeds the configured bound");

    if (k == 0 && l == 0) {
        KillingSpinor c;
        c.poly = SpinorPoly::constant(scalar_one());
        c.is_real = true;
        c.label = "1";
        return {c};
    }

    std::vector<KillingSpinor> zg = ckv_generators();
    std::vector<KillingSpinor> yg = cky_generators();

    std::vector<std::vector<int>> zsets, ysets;
    multisets((int)zg.size(), k, zsets);
    multisets((int)yg.size(), l, ysets);

    std::vector<KillingSpinor> candidates;
    candidates.reserve(zsets.size() * ysets.size());
    for (const auto& zs : zsets)
        for (const auto& ys : ysets) {
            std::vector<KillingSpinor> factors;
            factors.reserve(k + l);
            std::string label;
            for (int i : zs) {
                factors.push_back(zg[i]);
                label += zg[i].label + ".";
            }
            for (int i : ys) {
                factors.push_back(yg[i]);
                label += yg[i].label + ".";
            }
            KillingSpinor p = ks_product(factors);
            if (!label.empty()) label.pop_back();
            p.label = label;
            candidates.push_back(std::move(p));
        }

    std::vector<uint32_t> dict = killing_monomial_dictionary(candidates);
    GramSchmidt gs{{}, rank_tol};
    std::vector<KillingSpinor> picked;
    for (auto& c : candidates)
        if (gs.offer(killing_coeff_vector(c, dict))) picked.push_back(std::move(c));
    return picked;
}

int killing_rank_dimension(int k, int twol, double rank_tol) {
    return (int)killing_basis(k, twol, 8, rank_tol).size();
}

} // namespace spincons
