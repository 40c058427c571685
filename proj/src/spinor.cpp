#include "spincons/spinor.hpp"

#include <algorithm>
#include <cmath>

namespace spincons {

namespace {

constexpr int kMaxBinom = 64;

const double* binom_table() {
    static double tab[kMaxBinom * kMaxBinom];
    static bool init = [] {
        for (int n = 0; n < kMaxBinom; ++n) {
            tab[n * kMaxBinom + 0] = 1.0;
            for (int k = 1; k <= n; ++k)
                tab[n * kMaxBinom + k] =
                    (k == n) ? 1.0
                             : tab[(n - 1) * kMaxBinom + k - 1] + tab[(n - 1) * kMaxBinom + k];
            for (int k = n + 1; k < kMaxBinom; ++k) tab[n * kMaxBinom + k] = 0.0;
        }
        return true;
    }();
    (void)init;
    return tab;
}

} // namespace

double binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0.0;
    if (n < kMaxBinom) return binom_table()[n * kMaxBinom + k];
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

cplx SymSpinor::component(const std::vector<int>& unprimed, const std::vector<int>& primed) const {
    if ((int)unprimed.size() != p_ || (int)primed.size() != q_)
        throw std::invalid_argument("component: wrong index count");
    int i = 0, j = 0;
    for (int v : unprimed) i += (v != 0);
    for (int v : primed) j += (v != 0);
    return at(i, j);
}

SymSpinor& SymSpinor::operator+=(const SymSpinor& o) {
    if (o.p_ != p_ || o.q_ != q_) throw std::invalid_argument("valence mismatch in +=");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}
SymSpinor& SymSpinor::operator-=(const SymSpinor& o) {
    if (o.p_ != p_ || o.q_ != q_) throw std::invalid_argument("valence mismatch in -=");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}
SymSpinor& SymSpinor::operator*=(cplx s) {
    for (auto& v : c_) v *= s;
    return *this;
}

double SymSpinor::max_norm() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
}

SymSpinor o_spinor() {
    SymSpinor s(1, 0);
    s.at(0) = 1.0;
    return s;
}
SymSpinor iota_spinor() {
    SymSpinor s(1, 0);
    s.at(1) = 1.0;
    return s;
}

const Kernel kEps = {{{cplx(0), cplx(1)}, {cplx(-1), cplx(0)}}};
const Kernel kDelta = {{{cplx(1), cplx(0)}, {cplx(0), cplx(1)}}};

namespace {

// Per-pair contraction data summed over the 4 index assignments of one pair.
// For m pairs we iterate over compositions m = u00+u01+u10+u11; the pairs
// contribute multinom(m) * prod K[a][b]^{u_ab}, with a's total extra 1-count
// u10+u11 and b's u01+u11.
struct PairSum {
    int a_ones, b_ones;
    cplx weight;
};

void pair_compositions(int m, const Kernel& K, std::vector<PairSum>& out) {
    out.clear();
    const double* bt = nullptr;
    (void)bt;
    for (int u00 = 0; u00 <= m; ++u00)
        for (int u01 = 0; u01 <= m - u00; ++u01)
            for (int u10 = 0; u10 <= m - u00 - u01; ++u10) {
                int u11 = m - u00 - u01 - u10;
                cplx w = binom(m, u00) * binom(m - u00, u01) * binom(m - u00 - u01, u10);
                bool dead = false;
                auto powk = [&](cplx base, int e) {
                    if (e == 0) return cplx(1);
                    if (base == cplx(0)) { dead = true; return cplx(0); }
                    cplx r(1);
                    for (int i = 0; i < e; ++i) r *= base;
                    return r;
                };
                w *= powk(K[0][0], u00);
                w *= powk(K[0][1], u01);
                w *= powk(K[1][0], u10);
                w *= powk(K[1][1], u11);
                if (dead || w == cplx(0)) continue;
                out.push_back({u10 + u11, u01 + u11, w});
            }
}

} // namespace

SymSpinor contract_general(const SymSpinor& a, const SymSpinor& b, int m, int n,
                           const Kernel& KU, const Kernel& KP) {
    const int p1 = a.p(), q1 = a.q(), p2 = b.p(), q2 = b.q();
    if (m < 0 || n < 0 || m > std::min(p1, p2) || n > std::min(q1, q2))
        throw std::invalid_argument("contract_general: contraction exceeds valence");
    const int P = p1 + p2 - 2 * m, Q = q1 + q2 - 2 * n;
    SymSpinor r(P, Q);

    std::vector<PairSum> us, vs;
    pair_compositions(m, KU, us);
    pair_compositions(n, KP, vs);

    for (int I = 0; I <= P; ++I) {
        for (int J = 0; J <= Q; ++J) {
            cplx acc(0);
            for (int i1 = std::max(0, I - (p2 - m)); i1 <= std::min(I, p1 - m); ++i1) {
                const double wu =
                    binom(p1 - m, i1) * binom(p2 - m, I - i1) / binom(P, I);
                for (int j1 = std::max(0, J - (q2 - n)); j1 <= std::min(J, q1 - n); ++j1) {
                    const double wp =
                        binom(q1 - n, j1) * binom(q2 - n, J - j1) / binom(Q, J);
                    cplx s(0);
                    for (const auto& u : us)
                        for (const auto& v : vs)
                            s += u.weight * v.weight *
                                 a.at(i1 + u.a_ones, j1 + v.a_ones) *
                                 b.at(I - i1 + u.b_ones, J - j1 + v.b_ones);
                    acc += wu * wp * s;
                }
            }
            r.at(I, J) = acc;
        }
    }
    return r;
}

SymSpinor sym_outer(const SymSpinor& a, const SymSpinor& b) {
    return contract_general(a, b, 0, 0, kEps, kEps);
}

SymSpinor transvect(const SymSpinor& a, const SymSpinor& b, int m, int n) {
    return contract_general(a, b, m, n, kEps, kEps);
}

SymSpinor pair_contract(const SymSpinor& a, const SymSpinor& b, int m, int n) {
    return contract_general(a, b, m, n, kDelta, kDelta);
}

SymSpinor conjugate(const SymSpinor& a) {
    SymSpinor r(a.q(), a.p());
    for (int i = 0; i <= a.p(); ++i)
        for (int j = 0; j <= a.q(); ++j) r.at(j, i) = std::conj(a.at(i, j));
    return r;
}

SymSpinor raise_all(const SymSpinor& a) {
    const int p = a.p(), q = a.q();
    SymSpinor r(p, q);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
            double sgn = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            r.at(i, j) = sgn * a.at(p - i, q - j);
        }
    return r;
}

SymSpinor lower_all(const SymSpinor& a) {
    const int p = a.p(), q = a.q();
    SymSpinor r(p, q);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) {
            double sgn = (((p - i) + (q - j)) % 2 == 0) ? 1.0 : -1.0;
            r.at(i, j) = sgn * a.at(p - i, q - j);
        }
    return r;
}

SymSpinor merge_unprimed(const SymSpinor& g0, const SymSpinor& g1) {
    const int p = g0.p(), q = g0.q();
    if (g1.p() != p || g1.q() != q) throw std::invalid_argument("merge_unprimed: valence mismatch");
    SymSpinor r(p + 1, q);
    for (int i = 0; i <= p + 1; ++i)
        for (int j = 0; j <= q; ++j) {
            cplx v(0);
            if (i <= p) v += double(p + 1 - i) * g0.at(i, j);
            if (i >= 1) v += double(i) * g1.at(i - 1, j);
            r.at(i, j) = v / double(p + 1);
        }
    return r;
}

SymSpinor merge_primed(const SymSpinor& g0, const SymSpinor& g1) {
    const int p = g0.p(), q = g0.q();
    if (g1.p() != p || g1.q() != q) throw std::invalid_argument("merge_primed: valence mismatch");
    SymSpinor r(p, q + 1);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q + 1; ++j) {
            cplx v(0);
            if (j <= q) v += double(q + 1 - j) * g0.at(i, j);
            if (j >= 1) v += double(j) * g1.at(i, j - 1);
            r.at(i, j) = v / double(q + 1);
        }
    return r;
}

SymSpinor fix_unprimed(const SymSpinor& a, int v) {
    if (a.p() < 1) throw std::invalid_argument("fix_unprimed: no unprimed index");
    SymSpinor r(a.p() - 1, a.q());
    for (int i = 0; i <= a.p() - 1; ++i)
        for (int j = 0; j <= a.q(); ++j) r.at(i, j) = a.at(i + (v ? 1 : 0), j);
    return r;
}

SymSpinor fix_primed(const SymSpinor& a, int v) {
    if (a.q() < 1) throw std::invalid_argument("fix_primed: no primed index");
    SymSpinor r(a.p(), a.q() - 1);
    for (int i = 0; i <= a.p(); ++i)
        for (int j = 0; j <= a.q() - 1; ++j) r.at(i, j) = a.at(i, j + (v ? 1 : 0));
    return r;
}

namespace {
inline cplx at_or_zero(const SymSpinor& a, int i, int j) {
    if (i < 0 || j < 0 || i > a.p() || j > a.q()) return cplx(0);
    return a.at(i, j);
}
} // namespace

SymSpinor rotate_lower_unprimed(const SymSpinor& a, const std::array<std::array<cplx, 2>, 2>& L) {
    const int p = a.p(), q = a.q();
    SymSpinor r(p, q);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j)
            // slots with value 0 (count p-i) give L[0][B]; slots with value 1 give L[1][B]
            r.at(i, j) =
                double(p - i) * (L[0][0] * a.at(i, j) + L[0][1] * at_or_zero(a, i + 1, j)) +
                double(i) * (L[1][0] * at_or_zero(a, i - 1, j) + L[1][1] * a.at(i, j));
    return r;
}

SymSpinor rotate_lower_primed(const SymSpinor& a, const std::array<std::array<cplx, 2>, 2>& L) {
    const int p = a.p(), q = a.q();
    SymSpinor r(p, q);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j)
            r.at(i, j) =
                double(q - j) * (L[0][0] * a.at(i, j) + L[0][1] * at_or_zero(a, i, j + 1)) +
                double(j) * (L[1][0] * at_or_zero(a, i, j - 1) + L[1][1] * a.at(i, j));
    return r;
}

SymSpinor rotate_upper_unprimed(const SymSpinor& a, const std::array<std::array<cplx, 2>, 2>& L) {
    const int p = a.p(), q = a.q();
    SymSpinor r(p, q);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j)
            // -sum over slots of L[B][A_slot] a^{..B..}
            r.at(i, j) =
                -double(p - i) * (L[0][0] * a.at(i, j) + L[1][0] * at_or_zero(a, i + 1, j)) -
                double(i) * (L[0][1] * at_or_zero(a, i - 1, j) + L[1][1] * a.at(i, j));
    return r;
}

SymSpinor rotate_upper_primed(const SymSpinor& a, const std::array<std::array<cplx, 2>, 2>& L) {
    const int p = a.p(), q = a.q();
    SymSpinor r(p, q);
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j)
            r.at(i, j) =
                -double(q - j) * (L[0][0] * a.at(i, j) + L[1][0] * at_or_zero(a, i, j + 1)) -
                double(j) * (L[0][1] * at_or_zero(a, i, j - 1) + L[1][1] * a.at(i, j));
    return r;
}

SymSpinor vector_spinor(const Vec4& v) {
    SymSpinor g(1, 1);
    g.at(0, 0) = kInvSqrt2 * (v.t + v.z);
    g.at(0, 1) = kInvSqrt2 * cplx(v.x, v.y);
    g.at(1, 0) = kInvSqrt2 * cplx(v.x, -v.y);
    g.at(1, 1) = kInvSqrt2 * (v.t - v.z);
    return g;
}

SymSpinor vector_spinor(const CVec4& v) {
    SymSpinor g(1, 1);
    g.at(0, 0) = kInvSqrt2 * (v.t + v.z);
    g.at(0, 1) = kInvSqrt2 * (v.x + cplx(0, 1) * v.y);
    g.at(1, 0) = kInvSqrt2 * (v.x - cplx(0, 1) * v.y);
    g.at(1, 1) = kInvSqrt2 * (v.t - v.z);
    return g;
}

Vec4 spinor_vector(const SymSpinor& g, double tol) {
    if (g.p() != 1 || g.q() != 1) throw std::invalid_argument("spinor_vector: valence != (1,1)");
    double scale = std::max(g.max_norm(), 1e-300);
    double defect = std::max({std::abs(std::imag(g.at(0, 0))), std::abs(std::imag(g.at(1, 1))),
                              std::abs(g.at(1, 0) - std::conj(g.at(0, 1)))});
    if (defect > tol * std::max(1.0, scale))
        throw std::domain_error("spinor_vector: grid is not Hermitian (not a real vector)");
    Vec4 v;
    v.t = kInvSqrt2 * std::real(g.at(0, 0) + g.at(1, 1));
    v.z = kInvSqrt2 * std::real(g.at(0, 0) - g.at(1, 1));
    v.x = kInvSqrt2 * std::real(g.at(0, 1) + g.at(1, 0));
    v.y = kInvSqrt2 * std::real(cplx(0, -1) * (g.at(0, 1) - g.at(1, 0)));
    return v;
}

CVec4 spinor_cvector(const SymSpinor& g) {
    if (g.p() != 1 || g.q() != 1) throw std::invalid_argument("spinor_cvector: valence != (1,1)");
    CVec4 v;
    v.t = kInvSqrt2 * (g.at(0, 0) + g.at(1, 1));
    v.z = kInvSqrt2 * (g.at(0, 0) - g.at(1, 1));
    v.x = kInvSqrt2 * (g.at(0, 1) + g.at(1, 0));
    v.y = kInvSqrt2 * cplx(0, -1) * (g.at(0, 1) - g.at(1, 0));
    return v;
}

SymSpinor covector_spinor(const Vec4& k) {
    SymSpinor g(1, 1);
    g.at(0, 0) = kInvSqrt2 * (k.t + k.z);
    g.at(0, 1) = kInvSqrt2 * cplx(k.x, -k.y);
    g.at(1, 0) = kInvSqrt2 * cplx(k.x, k.y);
    g.at(1, 1) = kInvSqrt2 * (k.t - k.z);
    return g;
}

Vec4 spinor_covector(const SymSpinor& g, double tol) {
    if (g.p() != 1 || g.q() != 1) throw std::invalid_argument("spinor_covector: valence != (1,1)");
    double scale = std::max(g.max_norm(), 1e-300);
    double defect = std::max({std::abs(std::imag(g.at(0, 0))), std::abs(std::imag(g.at(1, 1))),
                              std::abs(g.at(1, 0) - std::conj(g.at(0, 1)))});
    if (defect > tol * std::max(1.0, scale))
        throw std::domain_error("spinor_covector: grid is not Hermitian");
    Vec4 k;
    k.t = kInvSqrt2 * std::real(g.at(0, 0) + g.at(1, 1));
    k.z = kInvSqrt2 * std::real(g.at(0, 0) - g.at(1, 1));
    k.x = kInvSqrt2 * std::real(g.at(0, 1) + g.at(1, 0));
    k.y = kInvSqrt2 * std::real(cplx(0, 1) * (g.at(0, 1) - g.at(1, 0)));
    return k;
}

cplx der_coef(int A, int Ap, int mu) {
    static const cplx tab[2][2][4] = {
        {{cplx(kInvSqrt2), 0, 0, cplx(kInvSqrt2)},
         {0, cplx(kInvSqrt2), cplx(0, -kInvSqrt2), 0}},
        {{0, cplx(kInvSqrt2), cplx(0, kInvSqrt2), 0},
         {cplx(kInvSqrt2), 0, 0, cplx(-kInvSqrt2)}},
    };
    return tab[A][Ap][mu];
}

SymSpinor hermitize(const SymSpinor& a) {
    if (a.p() != a.q()) throw std::invalid_argument("hermitize: valence not (n,n)");
    return a + conjugate(a);
}

double hermiticity_defect(const SymSpinor& a) {
    if (a.p() != a.q()) throw std::invalid_argument("hermiticity_defect: valence not (n,n)");
    return (a - conjugate(a)).max_norm() * 0.5;
}

} // namespace spincons
