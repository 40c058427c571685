// dev scratch: chiral tensor with per-factor primed groups (B' slots fed by
// the first factor, C' slots by the second), sym-minus-skew combination.
#include <cstdio>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"
#include "spincons/tensors.hpp"

using namespace spincons;

static SymSpinor conj_deriv(const Jet& jet, int A, int Ap) {
    return conjugate(jet.raw1[Ap][A]);
}

static CDenseTensor build_v2(const Jet& jet) {
    const int twos = jet.twos, npairs = twos, rank = 2 + 2 * npairs, js = twos + 1;
    auto e_up = [](int mu) {
        Vec4 v;
        v[mu] = 1.0;
        return vector_spinor(v);
    };
    auto eps_low = [](int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); };

    SymSpinor F[2][2] = {{conj_deriv(jet, 0, 0), conj_deriv(jet, 0, 1)},
                         {conj_deriv(jet, 1, 0), conj_deriv(jet, 1, 1)}};

    // W[(mu1,mu2)][jb][jc]: the two a-slots soldered against the four-term
    // sym-minus-skew combination; left factor feeds the B' count jb.
    std::vector<cplx> W(16 * js * js, cplx(0));
    for (int mu1 = 0; mu1 < 4; ++mu1)
        for (int mu2 = 0; mu2 < 4; ++mu2)
            for (int A1 = 0; A1 < 2; ++A1)
                for (int P1 = 0; P1 < 2; ++P1)
                    for (int A2 = 0; A2 < 2; ++A2)
                        for (int P2 = 0; P2 < 2; ++P2) {
                            cplx ee = e_up(mu1).at(A1, P1) * e_up(mu2).at(A2, P2);
                            if (ee == cplx(0)) continue;
                            for (int jb = 0; jb < js; ++jb)
                                for (int jc = 0; jc < js; ++jc) {
                                    cplx comb =
                                        0.5 * (F[A1][P1].at(0, jb) * F[A2][P2].at(0, jc) +
                                               F[A2][P1].at(0, jb) * F[A1][P2].at(0, jc) -
                                               F[A2][P2].at(0, jb) * F[A1][P1].at(0, jc) +
                                               F[A1][P2].at(0, jb) * F[A2][P1].at(0, jc));
                                    W[(mu1 * 4 + mu2) * js * js + jb * js + jc] += ee * comb;
                                }
                        }

    // Q2[mub][muc][b'][c'] with the eps_{BC} factor
    cplx Q2[4][4][2][2] = {};
    for (int mub = 0; mub < 4; ++mub)
        for (int muc = 0; muc < 4; ++muc)
            for (int B = 0; B < 2; ++B)
                for (int Bp = 0; Bp < 2; ++Bp)
                    for (int C = 0; C < 2; ++C)
                        for (int Cp = 0; Cp < 2; ++Cp)
                            Q2[mub][muc][Bp][Cp] +=
                                e_up(mub).at(B, Bp) * e_up(muc).at(C, Cp) * eps_low(B, C);

    std::vector<cplx> D(js * js, cplx(0));
    D[0] = 1.0;
    size_t width = 1;
    for (int pi = 0; pi < npairs; ++pi) {
        std::vector<cplx> next(width * 16 * js * js, cplx(0));
        for (size_t w = 0; w < width; ++w)
            for (int mub = 0; mub < 4; ++mub)
                for (int muc = 0; muc < 4; ++muc) {
                    size_t wn = w + width * (size_t(mub) + 4 * size_t(muc));
                    for (int jb = 0; jb < js; ++jb)
                        for (int jc = 0; jc < js; ++jc) {
                            cplx d = D[(w * js + jb) * js + jc];
                            if (d == cplx(0)) continue;
                            for (int db = 0; db < 2 && jb + db < js; ++db)
                                for (int dc = 0; dc < 2 && jc + dc < js; ++dc)
                                    next[((wn * js) + jb + db) * js + jc + dc] +=
                                        d * Q2[mub][muc][db][dc];
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
                for (int jb = 0; jb < js; ++jb)
                    for (int jc = 0; jc < js; ++jc)
                        acc += W[(mu1 * 4 + mu2) * js * js + jb * js + jc] *
                               D[(w * js + jb) * js + jc];
                out.v[size_t(mu1) + 4 * size_t(mu2) + 16 * w] = acc;
            }
    return out;
}

int main() {
    Rng rng(314);
    for (int twos : {1, 2, 3}) {
        std::vector<Mode> modes{{rng.spinor(1, 0), rng.complex_unit_disk(), +1},
                                {rng.spinor(1, 0), rng.complex_unit_disk(), -1}};
        SolutionField fld = superposition(twos, modes);
        Jet jet = jet_at(fld, {0.3, -0.2, 0.6, 0.1}, 1);
        CDenseTensor part = build_v2(jet);
        DenseTensor Vp(part.rank), Vm(part.rank);
        for (size_t i = 0; i < part.v.size(); ++i) {
            Vp.v[i] = 2 * part.v[i].real();
            Vm.v[i] = -2 * part.v[i].imag();
        }
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
        std::printf("2s=%d: sym01=%.1e skew23=%.1e pairint=%.1e trace=%.2e (worst %d,%d) "
                    "hodge=%.1e trace01=%.2e\n",
                    twos, dense_symmetry_defect(Vp, 0, 1) / scale,
                    dense_skew_defect(Vp, 2, 3) / scale, pint, tworst / scale, aw, bw, hd / scale,
                    dense_trace_norm(Vp, 0, 1) / scale);
    }
    return 0;
}
