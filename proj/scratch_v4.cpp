// dev scratch: current-derived chiral tensor: group = all of factor 1's
// primed (2s+1) plus 2s-1 of factor 2's; free primed = factor 2's field +
// factor 2's derivative index; symmetrized over the two a-slots.
#include <cstdio>
#include <functional>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"
#include "spincons/tensors.hpp"

using namespace spincons;

static SymSpinor conj_deriv(const Jet& jet, int A, int Ap) {
    return conjugate(jet.raw1[Ap][A]);
}

static CDenseTensor build_vE(const Jet& jet) {
    const int twos = jet.twos, npairs = twos, rank = 2 + 2 * npairs, js = 2 * twos + 1;
    auto e_up = [](int mu) {
        Vec4 v;
        v[mu] = 1.0;
        return vector_spinor(v);
    };
    auto eps_low = [](int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); };
    SymSpinor F[2][2] = {{conj_deriv(jet, 0, 0), conj_deriv(jet, 0, 1)},
                         {conj_deriv(jet, 1, 0), conj_deriv(jet, 1, 1)}};
    // T1[A]: (0, 2s+1) fully symmetrized derivative of conj(phi)
    SymSpinor T1[2] = {merge_primed(F[0][0], F[0][1]), merge_primed(F[1][0], F[1][1])};

    // core[A1][P1][A2][P2]: (0,4s) group grid
    SymSpinor core[2][2][2][2];
    for (int A1 = 0; A1 < 2; ++A1)
        for (int P1 = 0; P1 < 2; ++P1)
            for (int A2 = 0; A2 < 2; ++A2)
                for (int P2 = 0; P2 < 2; ++P2) {
                    SymSpinor c = (twos >= 2)
                                      ? sym_outer(T1[A1], fix_primed(F[A2][P2], P1))
                                      : T1[A1] * F[A2][P2].at(0, P1); // 2s-1 = 0 at s=1/2
                    SymSpinor d = (twos >= 2)
                                      ? sym_outer(T1[A2], fix_primed(F[A1][P1], P2))
                                      : T1[A2] * F[A1][P1].at(0, P2);
                    core[A1][P1][A2][P2] = (c + d) * 0.5;
                }

    std::vector<cplx> H(16 * js, cplx(0));
    for (int mu1 = 0; mu1 < 4; ++mu1)
        for (int mu2 = 0; mu2 < 4; ++mu2)
            for (int j = 0; j < js; ++j) {
                cplx acc(0);
                for (int A1 = 0; A1 < 2; ++A1)
                    for (int P1 = 0; P1 < 2; ++P1)
                        for (int A2 = 0; A2 < 2; ++A2)
                            for (int P2 = 0; P2 < 2; ++P2)
                                acc += e_up(mu1).at(A1, P1) * e_up(mu2).at(A2, P2) *
                                       core[A1][P1][A2][P2].at(0, j);
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
                        for (int dd = 0; dd <= 2 && j + dd < js; ++dd)
                            next[wn * js + j + dd] += d * Q[mub][muc][dd];
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

int main() {
    Rng rng(314);
    CVec4 nhat{0, kInvSqrt2, cplx(0, kInvSqrt2), 0};
    for (int twos : {1, 2}) {
        std::vector<Mode> modes{{rng.spinor(1, 0), rng.complex_unit_disk(), +1},
                                {rng.spinor(1, 0), rng.complex_unit_disk(), -1}};
        SolutionField fld = superposition(twos, modes);
        Point4 x{0.3, -0.2, 0.6, 0.1};
        auto vE = [&](const Point4& p, int reim) {
            Jet j = jet_at(fld, p, 1);
            CDenseTensor part = build_vE(j);
            DenseTensor V(part.rank);
            for (size_t i = 0; i < part.v.size(); ++i)
                V.v[i] = reim == 0 ? 2 * part.v[i].real() : -2 * part.v[i].imag();
            return V;
        };
        DenseTensor Vp = vE(x, 0), Vm = vE(x, 1);
        double scale = std::max({Vp.max_abs(), Vm.max_abs(), 1e-300});
        double tworst = 0;
        int aw = -1, bw = -1;
        for (int a = 1; a < Vp.rank; ++a)
            for (int b = a + 1; b < Vp.rank; ++b) {
                double t = std::max(dense_trace_norm(Vp, a, b), dense_trace_norm(Vm, a, b));
                if (t > tworst) { tworst = t; aw = a; bw = b; }
            }
        DenseTensor h = dense_hodge_on_pair(Vp, 2, 3);
        double hd = 0;
        for (size_t i = 0; i < h.v.size(); ++i) hd = std::max(hd, std::abs(h.v[i] - Vm.v[i]));
        double pint = (twos >= 2) ? dense_pair_interchange_defect(Vp, 2, 3, 4, 5) / scale : 0.0;
        std::printf("E 2s=%d: sym01=%.1e skew23=%.1e pairint=%.1e trace=%.2e (%d,%d) hodge=%.1e\n",
                    twos, dense_symmetry_defect(Vp, 0, 1) / scale,
                    dense_skew_defect(Vp, 2, 3) / scale, pint, tworst / scale, aw, bw, hd / scale);

        // FD conservation on slot 0
        const double hstep = 0.01;
        const double etainv[4] = {1, -1, -1, -1};
        std::vector<double> div(Vp.v.size() >> 2, 0.0);
        for (int mu = 0; mu < 4; ++mu) {
            Point4 xp = x, xm = x, xp2 = x, xm2 = x;
            xp[mu] += hstep; xm[mu] -= hstep; xp2[mu] += 2 * hstep; xm2[mu] -= 2 * hstep;
            DenseTensor fp = vE(xp, 0), fm = vE(xm, 0), fp2 = vE(xp2, 0), fm2 = vE(xm2, 0);
            for (size_t rest = 0; rest < div.size(); ++rest) {
                size_t f0 = (rest << 2) | size_t(mu);
                div[rest] += etainv[mu] *
                             (8 * (fp.v[f0] - fm.v[f0]) - (fp2.v[f0] - fm2.v[f0])) / (12 * hstep);
            }
        }
        double dworst = 0;
        for (double d : div) dworst = std::max(dworst, std::abs(d));
        std::printf("  FD divergence (slot 0): %.3e\n", dworst / scale);

        // reference wave densities through this tensor (t,t,(t,ubar)) with -1
        SolutionField w = paper_wave(2 * ((twos + 1) / 2) * 0 + (twos % 2 == 0 ? twos : 2), 2.0,
                                     3.0, +1);
        if (twos % 2 == 0) {
            Jet jw = jet_at(w, {0, 0, 0, 0}, 1);
            CDenseTensor part = build_vE(jw);
            // contract t,t, (t, conj nhat) pairs
            auto contract = [&](const CDenseTensor& T) {
                cplx tvec[4] = {1, 0, 0, 0};
                cplx ub[4] = {0, kInvSqrt2, cplx(0, -kInvSqrt2), 0};
                cplx acc(0);
                for (size_t f = 0; f < T.v.size(); ++f) {
                    cplx wgt(1);
                    int mu0 = int(f & 3), mu1 = int((f >> 2) & 3);
                    wgt *= tvec[mu0] * tvec[mu1];
                    if (wgt == cplx(0)) continue;
                    for (int pi = 0; pi < twos; ++pi) {
                        int mb = int((f >> (4 + 4 * pi)) & 3), mc = int((f >> (6 + 4 * pi)) & 3);
                        wgt *= tvec[mb] * ub[mc];
                        if (wgt == cplx(0)) break;
                    }
                    if (wgt == cplx(0)) continue;
                    acc += wgt * T.v[f];
                }
                return -acc;
            };
            cplx W = contract(part);
            std::printf("  wave s=%d f=2 w=3: chiral+ = %.6f (want 72)  chiral- = %.6f (want 0)\n",
                        twos / 2, 2 * W.real(), -2 * W.imag());
        }
    }
    return 0;
}
