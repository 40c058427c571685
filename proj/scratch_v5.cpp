// dev scratch: solve for the conserved + trace-free combination of the three
// on-shell chiral structures (cross, diag, both-free-on-one-factor).
#include <Eigen/Dense>
#include <cstdio>
#include <functional>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"
#include "spincons/tensors.hpp"

using namespace spincons;

static SymSpinor conj_deriv(const Jet& jet, int A, int Ap) {
    return conjugate(jet.raw1[Ap][A]);
}

// generic assembler from a G-table (0,4s)-grids
static CDenseTensor assemble(int twos, const SymSpinor G[2][2][2][2]) {
    const int npairs = twos, rank = 2 + 2 * npairs, js = 2 * twos + 1;
    auto e_up = [](int mu) { Vec4 v; v[mu] = 1.0; return vector_spinor(v); };
    auto eps_low = [](int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); };
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
                                       G[A1][P1][A2][P2].at(0, j);
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

static CDenseTensor candidate(int which, const Jet& jet) {
    const int twos = jet.twos;
    SymSpinor F[2][2] = {{conj_deriv(jet, 0, 0), conj_deriv(jet, 0, 1)},
                         {conj_deriv(jet, 1, 0), conj_deriv(jet, 1, 1)}};
    SymSpinor T1[2] = {merge_primed(F[0][0], F[0][1]), merge_primed(F[1][0], F[1][1])};
    SymSpinor G[2][2][2][2];
    for (int A1 = 0; A1 < 2; ++A1)
        for (int P1 = 0; P1 < 2; ++P1)
            for (int A2 = 0; A2 < 2; ++A2)
                for (int P2 = 0; P2 < 2; ++P2) {
                    if (which == 0) G[A1][P1][A2][P2] = sym_outer(F[A2][P1], F[A1][P2]);
                    else if (which == 1) G[A1][P1][A2][P2] = sym_outer(F[A1][P1], F[A2][P2]);
                    else {
                        SymSpinor c = (twos >= 2)
                                          ? sym_outer(T1[A1], fix_primed(F[A2][P2], P1))
                                          : T1[A1] * F[A2][P2].at(0, P1);
                        SymSpinor d = (twos >= 2)
                                          ? sym_outer(T1[A2], fix_primed(F[A1][P1], P2))
                                          : T1[A2] * F[A1][P1].at(0, P2);
                        G[A1][P1][A2][P2] = (c + d) * 0.5;
                    }
                }
    return assemble(twos, G);
}

int main() {
    Rng rng(314);
    const int twos = 1;
    std::vector<Mode> modes{{rng.spinor(1, 0), rng.complex_unit_disk(), +1},
                            {rng.spinor(1, 0), rng.complex_unit_disk(), -1},
                            {rng.spinor(1, 0), rng.complex_unit_disk(), +1}};
    SolutionField fld = superposition(twos, modes);
    Point4 x{0.3, -0.2, 0.6, 0.1};

    const int nc = 3;
    // rows: FD divergence entries + trace entries over pairs in last 4s+1
    std::vector<std::vector<cplx>> cols(nc);
    const double h = 0.02;
    const double etainv[4] = {1, -1, -1, -1};
    for (int c = 0; c < nc; ++c) {
        // divergence
        CDenseTensor base = candidate(c, jet_at(fld, x, 1));
        const int rank = base.rank;
        std::vector<cplx> div(base.v.size() >> 2, cplx(0));
        for (int mu = 0; mu < 4; ++mu) {
            Point4 xp = x, xm = x, xp2 = x, xm2 = x;
            xp[mu] += h; xm[mu] -= h; xp2[mu] += 2 * h; xm2[mu] -= 2 * h;
            CDenseTensor fp = candidate(c, jet_at(fld, xp, 1));
            CDenseTensor fm = candidate(c, jet_at(fld, xm, 1));
            CDenseTensor fp2 = candidate(c, jet_at(fld, xp2, 1));
            CDenseTensor fm2 = candidate(c, jet_at(fld, xm2, 1));
            for (size_t rest = 0; rest < div.size(); ++rest) {
                size_t f0 = (rest << 2) | size_t(mu);
                div[rest] +=
                    etainv[mu] * (8.0 * (fp.v[f0] - fm.v[f0]) - (fp2.v[f0] - fm2.v[f0])) /
                    (12 * h);
            }
        }
        cols[c] = div;
        // traces over slot pairs within the last rank-1 slots
        auto slot = [&](size_t f, int s) { return int((f >> (2 * s)) & 3u); };
        auto with = [&](size_t f, int s, int mu) {
            return (f & ~(size_t(3) << (2 * s))) | (size_t(mu) << (2 * s));
        };
        for (int a = 1; a < rank; ++a)
            for (int b = a + 1; b < rank; ++b) {
                for (size_t rest = 0; rest < (base.v.size() >> 4); ++rest) {
                    size_t f = 0;
                    int pos = 0;
                    for (int s = 0; s < rank; ++s) {
                        if (s == a || s == b) continue;
                        f |= ((rest >> (2 * pos)) & 3u) << (2 * s);
                        ++pos;
                    }
                    cplx tr(0);
                    for (int mu = 0; mu < 4; ++mu)
                        tr += etainv[mu] * base.v[with(with(f, a, mu), b, mu)];
                    (void)slot;
                    cols[c].push_back(tr);
                }
            }
    }

    const size_t rows = cols[0].size();
    Eigen::MatrixXcd M(rows, nc);
    for (int c = 0; c < nc; ++c)
        for (size_t r = 0; r < rows; ++r) M(r, c) = cols[c][r];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
    std::printf("singular values:");
    for (int i = 0; i < nc; ++i) std::printf(" %.3e", svd.singularValues()(i));
    std::printf("\n");
    Eigen::VectorXcd null = svd.matrixV().col(nc - 1);
    std::printf("null combo (cross, diag, onefactor): (%.4f%+.4fi, %.4f%+.4fi, %.4f%+.4fi)\n",
                null(0).real(), null(0).imag(), null(1).real(), null(1).imag(), null(2).real(),
                null(2).imag());
    // normalize by first entry
    if (std::abs(null(0)) > 1e-9) {
        Eigen::VectorXcd n2 = null / null(0);
        std::printf("normalized: (1, %.6f%+.6fi, %.6f%+.6fi)\n", n2(1).real(), n2(1).imag(),
                    n2(2).real(), n2(2).imag());
    }
    return 0;
}
