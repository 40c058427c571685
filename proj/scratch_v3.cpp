// dev scratch: fully primed-symmetrized chiral tensor candidate vs variant A:
// structure (sym/skew/traces/hodge) plus conservation via finite differences.
#include <cstdio>
#include <functional>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"
#include "spincons/tensors.hpp"

using namespace spincons;

static SymSpinor conj_deriv(const Jet& jet, int A, int Ap) {
    return conjugate(jet.raw1[Ap][A]);
}

// S-variant: all 4s+2 primed indices fully symmetrized.
static CDenseTensor build_vS(const Jet& jet) {
    const int twos = jet.twos, npairs = twos, rank = 2 + 2 * npairs;
    auto e_up = [](int mu) {
        Vec4 v;
        v[mu] = 1.0;
        return vector_spinor(v);
    };
    auto eps_low = [](int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); };
    SymSpinor F[2][2] = {{conj_deriv(jet, 0, 0), conj_deriv(jet, 0, 1)},
                         {conj_deriv(jet, 1, 0), conj_deriv(jet, 1, 1)}};

    // P[A1][A2]: (0, 4s+2)-symmetric product with both derivative indices merged
    SymSpinor P[2][2] = {{SymSpinor(0, 2 * twos + 2), SymSpinor(0, 2 * twos + 2)},
                         {SymSpinor(0, 2 * twos + 2), SymSpinor(0, 2 * twos + 2)}};
    for (int A1 = 0; A1 < 2; ++A1)
        for (int A2 = 0; A2 < 2; ++A2) {
            SymSpinor q0 = merge_primed(sym_outer(F[A1][0], F[A2][0]),
                                        sym_outer(F[A1][0], F[A2][1]));
            SymSpinor q1 = merge_primed(sym_outer(F[A1][1], F[A2][0]),
                                        sym_outer(F[A1][1], F[A2][1]));
            P[A1][A2] = merge_primed(q0, q1);
        }

    const int js = 2 * twos + 3; // counts 0..4s+2
    std::vector<cplx> H(16 * js, cplx(0));
    for (int mu1 = 0; mu1 < 4; ++mu1)
        for (int mu2 = 0; mu2 < 4; ++mu2)
            for (int A1 = 0; A1 < 2; ++A1)
                for (int P1 = 0; P1 < 2; ++P1)
                    for (int A2 = 0; A2 < 2; ++A2)
                        for (int P2 = 0; P2 < 2; ++P2) {
                            cplx ee = e_up(mu1).at(A1, P1) * e_up(mu2).at(A2, P2);
                            if (ee == cplx(0)) continue;
                            for (int j = 0; j + P1 + P2 <= 2 * twos + 2; ++j)
                                H[(mu1 * 4 + mu2) * js + j] +=
                                    ee * P[A1][A2].at(0, j + P1 + P2) * 0.0; // placeholder
                        }
    // The above is wrong on purpose; the correct assembly needs the count split
    // between the a-slots and the pair slots.  Redo: value at slots =
    // P.at(0, P1 + P2 + sum of pair primed values).
    std::fill(H.begin(), H.end(), cplx(0));
    // We fold H differently: F2[mu1][mu2][A'] contributions must track counts,
    // so fold the a-slot primed values into the DP start instead.
    // start[j] = sum over (A1,P1,A2,P2) ee * [j == P1+P2] ... but P depends on A1A2.
    // Keep (A1,A2) outer and assemble fully per (A1,A2):
    cplx Q[4][4][3] = {};
    for (int mub = 0; mub < 4; ++mub)
        for (int muc = 0; muc < 4; ++muc)
            for (int B = 0; B < 2; ++B)
                for (int Bp = 0; Bp < 2; ++Bp)
                    for (int C = 0; C < 2; ++C)
                        for (int Cp = 0; Cp < 2; ++Cp)
                            Q[mub][muc][Bp + Cp] +=
                                e_up(mub).at(B, Bp) * e_up(muc).at(C, Cp) * eps_low(B, C);

    // DP over pairs tracking the primed count delta
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
                for (int A1 = 0; A1 < 2; ++A1)
                    for (int P1 = 0; P1 < 2; ++P1)
                        for (int A2 = 0; A2 < 2; ++A2)
                            for (int P2 = 0; P2 < 2; ++P2) {
                                cplx ee = e_up(mu1).at(A1, P1) * e_up(mu2).at(A2, P2);
                                if (ee == cplx(0)) continue;
                                for (int j = 0; j < js; ++j) {
                                    if (D[w * js + j] == cplx(0)) continue;
                                    if (P1 + P2 + j > 2 * twos + 2) continue;
                                    acc += ee * D[w * js + j] * P[A1][A2].at(0, P1 + P2 + j);
                                }
                            }
                out.v[size_t(mu1) + 4 * size_t(mu2) + 16 * w] = acc;
            }
    return out;
}

static void structure_report(const char* name, int twos, const DenseTensor& Vp,
                             const DenseTensor& Vm) {
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
    std::printf("%s 2s=%d: sym01=%.1e skew23=%.1e trace=%.2e (%d,%d) hodge=%.1e\n", name, twos,
                dense_symmetry_defect(Vp, 0, 1) / scale, dense_skew_defect(Vp, 2, 3) / scale,
                tworst / scale, aw, bw, hd / scale);
}

int main() {
    Rng rng(314);
    for (int twos : {1, 2}) {
        std::vector<Mode> modes{{rng.spinor(1, 0), rng.complex_unit_disk(), +1},
                                {rng.spinor(1, 0), rng.complex_unit_disk(), -1}};
        SolutionField fld = superposition(twos, modes);
        Point4 x{0.3, -0.2, 0.6, 0.1};

        auto vS = [&](const Point4& p) {
            Jet j = jet_at(fld, p, 1);
            CDenseTensor part = build_vS(j);
            DenseTensor Vp(part.rank), Vm(part.rank);
            for (size_t i = 0; i < part.v.size(); ++i) {
                Vp.v[i] = 2 * part.v[i].real();
                Vm.v[i] = -2 * part.v[i].imag();
            }
            return std::pair{Vp, Vm};
        };
        auto [Vp, Vm] = vS(x);
        structure_report("S", twos, Vp, Vm);

        // conservation: d^a V_{a ...} via 4th-order FD on slot 0
        auto divergence = [&](std::function<DenseTensor(const Point4&)> field) {
            const double h = 0.01;
            DenseTensor base = field(x);
            std::vector<double> div(base.v.size() >> 2, 0.0);
            const double etainv[4] = {1, -1, -1, -1};
            for (int mu = 0; mu < 4; ++mu) {
                Point4 xp = x, xm = x, xp2 = x, xm2 = x;
                xp[mu] += h; xm[mu] -= h; xp2[mu] += 2 * h; xm2[mu] -= 2 * h;
                DenseTensor fp = field(xp), fm = field(xm), fp2 = field(xp2), fm2 = field(xm2);
                for (size_t rest = 0; rest < div.size(); ++rest) {
                    size_t f0 = (rest << 2) | size_t(mu);
                    double d =
                        (8 * (fp.v[f0] - fm.v[f0]) - (fp2.v[f0] - fm2.v[f0])) / (12 * h);
                    div[rest] += etainv[mu] * d;
                }
            }
            double worst = 0;
            for (double d : div) worst = std::max(worst, std::abs(d));
            return worst / std::max(base.max_abs(), 1e-300);
        };
        double dS = divergence([&](const Point4& p) { return vS(p).first; });
        double dA = divergence([&](const Point4& p) { return tensor_Vplus(jet_at(fld, p, 1)); });
        std::printf("  FD divergence: S-variant %.3e | A-variant %.3e\n", dS, dA);
    }
    return 0;
}
