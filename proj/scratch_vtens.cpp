// dev scratch: discriminate chiral-tensor symmetrization variants by the
// stated structure: skew pairs, pair interchange, trace-free last 4s+1,
// hodge duality, and symmetry of the first two slots.
#include <cstdio>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"
#include "spincons/tensors.hpp"

using namespace spincons;

static SymSpinor conj_deriv(const Jet& jet, int A, int Ap) {
    return conjugate(jet.raw1[Ap][A]);
}

// Build the V(conj phi) dense part from a supplied G-table.
static CDenseTensor assemble_from_G(int twos, const SymSpinor G[2][2][2][2]) {
    const int npairs = twos, rank = 2 + 2 * npairs, js = 2 * twos + 1;
    auto e_up = [](int mu) {
        Vec4 v;
        v[mu] = 1.0;
        return vector_spinor(v);
    };
    auto eps_low = [](int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); };
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

static void probe(const char* name, int twos, const SymSpinor G[2][2][2][2]) {
    CDenseTensor part = assemble_from_G(twos, G);
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
    std::printf("%-10s 2s=%d  sym01=%.1e skew=%.1e trace=%.2e (worst %d,%d) hodge=%.1e\n", name,
                twos, dense_symmetry_defect(Vp, 0, 1) / scale, dense_skew_defect(Vp, 2, 3) / scale,
                tworst / scale, aw, bw, hd / scale);
}

int main() {
    Rng rng(314);
    for (int twos : {1, 2}) {
        std::vector<Mode> modes;
        for (int i = 0; i < 2; ++i)
            modes.push_back({rng.spinor(1, 0), rng.complex_unit_disk(), i % 2 ? 1 : -1});
        SolutionField fld = superposition(twos, modes);
        Jet jet = jet_at(fld, {0.3, -0.2, 0.6, 0.1}, 1);
        SymSpinor F[2][2] = {{conj_deriv(jet, 0, 0), conj_deriv(jet, 0, 1)},
                             {conj_deriv(jet, 1, 0), conj_deriv(jet, 1, 1)}};

        // (A) cross pairing: so(F[A2][Ap1], F[A1][Ap2])
        SymSpinor GA[2][2][2][2], GC[2][2][2][2], GD[2][2][2][2], GB[2][2][2][2];
        for (int A1 = 0; A1 < 2; ++A1)
            for (int P1 = 0; P1 < 2; ++P1)
                for (int A2 = 0; A2 < 2; ++A2)
                    for (int P2 = 0; P2 < 2; ++P2) {
                        GA[A1][P1][A2][P2] = sym_outer(F[A2][P1], F[A1][P2]);
                        GC[A1][P1][A2][P2] = sym_outer(F[A1][P1], F[A2][P2]);
                        GD[A1][P1][A2][P2] =
                            (GA[A1][P1][A2][P2] + GC[A1][P1][A2][P2]) * 0.5;
                    }
        // (B) A'_2 merged into the field symmetrization in term1 and A'_1 in
        // term2, A-brackets as displayed
        for (int A1 = 0; A1 < 2; ++A1)
            for (int P1 = 0; P1 < 2; ++P1)
                for (int A2 = 0; A2 < 2; ++A2)
                    for (int P2 = 0; P2 < 2; ++P2) {
                        auto Wm = [&](int a, int b, int c) {
                            // merge over the second factor's derivative index
                            return merge_primed(sym_outer(F[a][b], F[c][0]),
                                                sym_outer(F[a][b], F[c][1]));
                        };
                        SymSpinor t1 = (Wm(A1, P1, A2) + Wm(A2, P1, A1)) * 0.5; // sym (A1 A2)
                        auto Wm2 = [&](int a, int b, int c) {
                            return merge_primed(sym_outer(F[a][b], F[c][0]),
                                                sym_outer(F[a][b], F[c][1]));
                        };
                        SymSpinor t2 = (Wm2(A2, P2, A1) - Wm2(A1, P2, A2)) * 0.5; // skew [A2 A1]
                        // extract with the merged index set to P2 (term1) / P1 (term2)
                        SymSpinor g(0, 2 * twos);
                        for (int j = 0; j <= 2 * twos; ++j)
                            g.at(0, j) = t1.at(0, j + P2) - t2.at(0, j + P1);
                        GB[A1][P1][A2][P2] = g;
                    }
        probe("A cross", twos, GA);
        probe("C diag", twos, GC);
        probe("D half", twos, GD);
        probe("B merged", twos, GB);
    }
    return 0;
}
