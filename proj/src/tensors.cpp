#include "spincons/tensors.hpp"

#include <algorithm>
#include <cmath>

namespace spincons {

namespace {

const SymSpinor& e_up(int mu) {
    static const std::array<SymSpinor, 4> tab = [] {
        std::array<SymSpinor, 4> t{SymSpinor(1, 1), SymSpinor(1, 1), SymSpinor(1, 1),
                                   SymSpinor(1, 1)};
        for (int m = 0; m < 4; ++m) {
            Vec4 v;
            v[m] = 1.0;
            t[m] = vector_spinor(v);
        }
        return t;
    }();
    return tab[mu];
}

double eps_low(int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); }

// d_{AA'} conj(phi) from the raw derivative of phi.
SymSpinor conj_deriv(const Jet& jet, int A, int Ap) { return conjugate(jet.raw1[Ap][A]); }

} // namespace

double DenseTensor::max_abs() const {
    double m = 0;
    for (double d : v) m = std::max(m, std::abs(d));
    return m;
}

SymSpinor tensor_T(const Jet& jet) {
    return sym_outer(jet.value, conjugate(jet.value)) * 2.0;
}

SymSpinor tensor_Z(const Jet& jet) {
    if (jet.derivs.size() < 2)
        throw std::invalid_argument("tensor_Z: jet order >= 1 required");
    const int twos = jet.twos;
    // X_{A1..A2s B B'} = Sym_unprimed[d_{BB'} phi]; on shell this equals the
    // raw derivative itself.
    SymSpinor X(twos + 1, 1);
    for (int Bp = 0; Bp < 2; ++Bp) {
        SymSpinor m = merge_unprimed(jet.raw1[0][Bp], jet.raw1[1][Bp]);
        for (int i = 0; i <= twos + 1; ++i) X.at(i, Bp) = m.at(i, 0);
    }
    SymSpinor Y = sym_outer(conjugate(jet.value), X) * cplx(0, 1);
    return Y + conjugate(Y);
}

CDenseTensor chiral_tensor_part(const Jet& jet) {
    if (jet.derivs.size() < 2)
        throw std::invalid_argument("chiral_tensor_part: jet order >= 1 required");
    const int twos = jet.twos;       // 2s
    const int npairs = twos;         // skew pairs
    const int rank = 2 + 2 * npairs; // 4s + 2

    SymSpinor F[2][2] = {{conj_deriv(jet, 0, 0), conj_deriv(jet, 0, 1)},
                         {conj_deriv(jet, 1, 0), conj_deriv(jet, 1, 1)}};

    // symmetric-minus-skew combination of F (x) F, all 4s field indices
    // symmetrized; the derivative labels A'_1, A'_2 stay on their slots
    SymSpinor G[2][2][2][2];
    for (int A1 = 0; A1 < 2; ++A1)
        for (int Ap1 = 0; Ap1 < 2; ++Ap1)
            for (int A2 = 0; A2 < 2; ++A2)
                for (int Ap2 = 0; Ap2 < 2; ++Ap2) {
                    SymSpinor sym = (sym_outer(F[A1][Ap1], F[A2][Ap2]) +
                                     sym_outer(F[A2][Ap1], F[A1][Ap2])) * 0.5;
                    SymSpinor skw = (sym_outer(F[A2][Ap2], F[A1][Ap1]) -
                                     sym_outer(F[A1][Ap2], F[A2][Ap1])) * 0.5;
                    G[A1][Ap1][A2][Ap2] = sym - skw;
                }

    const int js = 2 * twos + 1;
    std::vector<cplx> H(16 * js, cplx(0));
    for (int mu1 = 0; mu1 < 4; ++mu1)
        for (int mu2 = 0; mu2 < 4; ++mu2)
            for (int j = 0; j < js; ++j) {
                cplx acc(0);
                for (int A1 = 0; A1 < 2; ++A1)
                    for (int Ap1 = 0; Ap1 < 2; ++Ap1)
                        for (int A2 = 0; A2 < 2; ++A2)
                            for (int Ap2 = 0; Ap2 < 2; ++Ap2)
                                acc += e_up(mu1).at(A1, Ap1) * e_up(mu2).at(A2, Ap2) *
                                       G[A1][Ap1][A2][Ap2].at(0, j);
                H[(mu1 * 4 + mu2) * js + j] = acc;
            }

    cplx Q[4][4][3] = {};
    for (int mub = 0; mub < 4; ++mub)
        for (int muc = 0; muc < 4; ++muc)
            for (int B = 0; B < 2; ++B)
                for (int Bp = 0; Bp < 2; ++Bp)
                    for (int C = 0; C < 2; ++C)
                        for (int Cp = 0; Cp < 2; ++Cp)
                            Q[mub][muc][Bp + Cp] +=
                                e_up(mub).at(B, Bp) * e_up(muc).at(C, Cp) * eps_low(B, C);

    // DP over skew pairs; D[pair-flat][j] with j the accumulated primed count
    std::vector<cplx> D(js, cplx(0));
    D[0] = 1.0;
    size_t width = 1;
    for (int pi = 0; pi < npairs; ++pi) {
        std::vector<cplx> next(width * 16 * js, cplx(0));
        for (size_t w = 0; w < width; ++w)
            for (int mub = 0; mub < 4; ++mub)
                for (int muc = 0; muc < 4; ++muc) {
                    size_t wn = w + width * (size_t(mub) + 4 * size_t(muc));
                    for (int j = 0; j < js; ++j) {
                        cplx d = D[w * js + j];
                        if (d == cplx(0)) continue;
                        for (int delta = 0; delta <= 2 && j + delta < js; ++delta)
                            next[wn * js + j + delta] += d * Q[mub][muc][delta];
                    }
                }
        D = std::move(next);
        width *= 16;
    }

    CDenseTensor out(rank);
    for (size_t w = 0; w < width; ++w)
        for (int mu1 = 0; mu1 < 4; ++mu1)
            for (int mu2 = 0; mu2 < 4; ++mu2) {
                cplx acc(0);
                for (int j = 0; j < js; ++j) acc += H[(mu1 * 4 + mu2) * js + j] * D[w * js + j];
                out.v[size_t(mu1) + 4 * size_t(mu2) + 16 * w] = acc;
            }
    return out;
}

DenseTensor tensor_Vplus(const Jet& jet) {
    CDenseTensor part = chiral_tensor_part(jet);
    DenseTensor out(part.rank);
    for (size_t i = 0; i < part.v.size(); ++i) out.v[i] = 2.0 * part.v[i].real();
    return out;
}

DenseTensor tensor_Vminus(const Jet& jet) {
    CDenseTensor part = chiral_tensor_part(jet);
    DenseTensor out(part.rank);
    for (size_t i = 0; i < part.v.size(); ++i) out.v[i] = -2.0 * part.v[i].imag();
    return out;
}

DenseTensor dense_from_sym(const SymSpinor& S) {
    if (S.p() != S.q()) throw std::invalid_argument("dense_from_sym: valence not (r,r)");
    const int r = S.p();
    DenseTensor out(r);
    struct Walker {
        const SymSpinor& S;
        DenseTensor& out;
        int r;
        void go(int slot, size_t flat, int i, int j, cplx coef) {
            if (slot == r) {
                out.v[flat] += (coef * S.at(i, j)).real();
                return;
            }
            for (int mu = 0; mu < 4; ++mu)
                for (int A = 0; A < 2; ++A)
                    for (int Ap = 0; Ap < 2; ++Ap) {
                        cplx c = e_up(mu).at(A, Ap);
                        if (c == cplx(0)) continue;
                        go(slot + 1, flat + (size_t(mu) << (2 * slot)), i + A, j + Ap, coef * c);
                    }
        }
    } w{S, out, r};
    w.go(0, 0, 0, 0, cplx(1));
    return out;
}

namespace {

inline int slot_idx(size_t flat, int slot) { return int((flat >> (2 * slot)) & 3u); }
inline size_t with_slot(size_t flat, int slot, int mu) {
    return (flat & ~(size_t(3) << (2 * slot))) | (size_t(mu) << (2 * slot));
}

} // namespace

double dense_symmetry_defect(const DenseTensor& T, int a, int b) {
    double worst = 0;
    for (size_t f = 0; f < T.v.size(); ++f) {
        size_t g = with_slot(with_slot(f, a, slot_idx(f, b)), b, slot_idx(f, a));
        worst = std::max(worst, std::abs(T.v[f] - T.v[g]));
    }
    return worst;
}

double dense_skew_defect(const DenseTensor& T, int a, int b) {
    double worst = 0;
    for (size_t f = 0; f < T.v.size(); ++f) {
        size_t g = with_slot(with_slot(f, a, slot_idx(f, b)), b, slot_idx(f, a));
        worst = std::max(worst, std::abs(T.v[f] + T.v[g]));
    }
    return worst;
}

double dense_trace_norm(const DenseTensor& T, int a, int b) {
    const double etainv[4] = {1, -1, -1, -1};
    double worst = 0;
    const size_t n = T.v.size() >> 4;
    for (size_t rest = 0; rest < n; ++rest) {
        size_t f = 0;
        int pos = 0;
        for (int s = 0; s < T.rank; ++s) {
            if (s == a || s == b) continue;
            f |= ((rest >> (2 * pos)) & 3u) << (2 * s);
            ++pos;
        }
        double tr = 0;
        for (int mu = 0; mu < 4; ++mu)
            tr += etainv[mu] * T.v[with_slot(with_slot(f, a, mu), b, mu)];
        worst = std::max(worst, std::abs(tr));
    }
    return worst;
}

DenseTensor dense_hodge_on_pair(const DenseTensor& T, int a, int b) {
    // eps_{cd}^{~~ef} with eps_{0123} = +1; indices raised with eta
    static double epsmix[4][4][4][4];
    static bool init = [] {
        double eps[4][4][4][4] = {};
        std::vector<int> p{0, 1, 2, 3};
        do {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
            eps[p[0]][p[1]][p[2]][p[3]] = (inv % 2 == 0) ? 1.0 : -1.0;
        } while (std::next_permutation(p.begin(), p.end()));
        const double etainv[4] = {1, -1, -1, -1};
        for (int c = 0; c < 4; ++c)
            for (int d = 0; d < 4; ++d)
                for (int e = 0; e < 4; ++e)
                    for (int f = 0; f < 4; ++f)
                        epsmix[c][d][e][f] = eps[c][d][e][f] * etainv[e] * etainv[f];
        return true;
    }();
    (void)init;

    DenseTensor out(T.rank);
    for (size_t fl = 0; fl < T.v.size(); ++fl) {
        int c = slot_idx(fl, a), d = slot_idx(fl, b);
        double acc = 0;
        for (int e = 0; e < 4; ++e)
            for (int f2 = 0; f2 < 4; ++f2) {
                double w = epsmix[c][d][e][f2];
                if (w == 0.0) continue;
                acc += w * T.v[with_slot(with_slot(fl, a, e), b, f2)];
            }
        out.v[fl] = 0.5 * acc;
    }
    return out;
}

double dense_pair_interchange_defect(const DenseTensor& T, int a1, int a2, int b1, int b2) {
    double worst = 0;
    for (size_t f = 0; f < T.v.size(); ++f) {
        size_t g = f;
        g = with_slot(g, a1, slot_idx(f, b1));
        g = with_slot(g, b1, slot_idx(f, a1));
        g = with_slot(g, a2, slot_idx(f, b2));
        g = with_slot(g, b2, slot_idx(f, a2));
        worst = std::max(worst, std::abs(T.v[f] - T.v[g]));
    }
    return worst;
}

cplx mixed_full_contract(const SymSpinor& S, const std::vector<SymSpinor>& uppers) {
    SymSpinor cur = S;
    for (const auto& u : uppers) cur = pair_contract(u, cur, 1, 1) * (-1.0);
    if (cur.p() != 0 || cur.q() != 0)
        throw std::invalid_argument("mixed_full_contract: contraction incomplete");
    return cur.at(0, 0);
}

cplx energy_density(const Jet& jet) {
    SymSpinor T = tensor_T(jet);
    std::vector<SymSpinor> ts(size_t(jet.twos), vector_spinor(Vec4{1, 0, 0, 0}));
    return 0.5 * mixed_full_contract(T, ts);
}

cplx zilch_density(const Jet& jet) {
    SymSpinor Z = tensor_Z(jet);
    std::vector<SymSpinor> ts(size_t(jet.twos) + 1, vector_spinor(Vec4{1, 0, 0, 0}));
    return 0.5 * mixed_full_contract(Z, ts);
}

cplx chiral_complex_density(const Jet& jet, const CVec4& u) {
    const int twos = jet.twos;
    SymSpinor F[2][2] = {{conj_deriv(jet, 0, 0), conj_deriv(jet, 0, 1)},
                         {conj_deriv(jet, 1, 0), conj_deriv(jet, 1, 1)}};
    SymSpinor tup = vector_spinor(Vec4{1, 0, 0, 0});
    CVec4 ubar{std::conj(u.t), std::conj(u.x), std::conj(u.y), std::conj(u.z)};
    SymSpinor uup = vector_spinor(ubar);

    cplx qvec[3] = {0, 0, 0};
    for (int B = 0; B < 2; ++B)
        for (int Bp = 0; Bp < 2; ++Bp)
            for (int C = 0; C < 2; ++C)
                for (int Cp = 0; Cp < 2; ++Cp)
                    qvec[Bp + Cp] += tup.at(B, Bp) * uup.at(C, Cp) * eps_low(B, C);

    std::vector<cplx> conv(2 * twos + 1, cplx(0));
    conv[0] = 1.0;
    for (int r = 0; r < twos; ++r) {
        std::vector<cplx> next(2 * twos + 1, cplx(0));
        for (int j = 0; j <= 2 * twos; ++j) {
            if (conv[j] == cplx(0)) continue;
            for (int d = 0; d <= 2 && j + d <= 2 * twos; ++d) next[j + d] += conv[j] * qvec[d];
        }
        conv = std::move(next);
    }

    cplx W(0);
    for (int A1 = 0; A1 < 2; ++A1)
        for (int Ap1 = 0; Ap1 < 2; ++Ap1)
            for (int A2 = 0; A2 < 2; ++A2)
                for (int Ap2 = 0; Ap2 < 2; ++Ap2) {
                    cplx tt = tup.at(A1, Ap1) * tup.at(A2, Ap2);
                    if (tt == cplx(0)) continue;
                    SymSpinor sym = (sym_outer(F[A1][Ap1], F[A2][Ap2]) +
                                     sym_outer(F[A2][Ap1], F[A1][Ap2])) * 0.5;
                    SymSpinor skw = (sym_outer(F[A2][Ap2], F[A1][Ap1]) -
                                     sym_outer(F[A1][Ap2], F[A2][Ap1])) * 0.5;
                    SymSpinor G = sym - skw;
                    for (int j = 0; j <= 2 * twos; ++j) W += tt * G.at(0, j) * conv[j];
                }
    return -W;
}

} // namespace spincons
