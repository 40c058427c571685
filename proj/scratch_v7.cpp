// dev scratch: general-s coefficient solve for the conserved trace-free
// chiral tensor V = a GA + b GC + c X1 (+ d E).
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

// assemble a dense chiral-type tensor from a G-table of (0,4s) grids
static CDenseTensor assembleG(int twos, const SymSpinor G[2][2][2][2]) {
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
    auto eps_low = [](int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); };
    SymSpinor G[2][2][2][2];
    for (int A1 = 0; A1 < 2; ++A1)
        for (int P1 = 0; P1 < 2; ++P1)
            for (int A2 = 0; A2 < 2; ++A2)
                for (int P2 = 0; P2 < 2; ++P2) {
                    if (which == 0) {
                        G[A1][P1][A2][P2] = sym_outer(F[A2][P1], F[A1][P2]);
                    } else if (which == 1) {
                        G[A1][P1][A2][P2] = sym_outer(F[A1][P1], F[A2][P2]);
                    } else if (which == 2) {
                        SymSpinor c = (twos >= 2)
                                          ? sym_outer(T1[A1], fix_primed(F[A2][P2], P1))
                                          : T1[A1] * F[A2][P2].at(0, P1);
                        SymSpinor d = (twos >= 2)
                                          ? sym_outer(T1[A2], fix_primed(F[A1][P1], P2))
                                          : T1[A2] * F[A1][P1].at(0, P2);
                        G[A1][P1][A2][P2] = (c + d) * 0.5;
                    } else {
                        // X1 = eps_{A1A2} eps_{P1P2} m, with
                        // m = eps^{AB} eps^{E'F'} T1_A(E',..) T1_B(F',..), symmetrized
                        SymSpinor m(0, 2 * twos);
                        for (int a = 0; a < 2; ++a)
                            for (int b = 0; b < 2; ++b) {
                                double w = eps_low(a, b); // eps^{AB} numerics match
                                if (w == 0.0) continue;
                                m += transvect(T1[a], T1[b], 0, 1) * w;
                            }
                        G[A1][P1][A2][P2] = m * (eps_low(A1, A2) * eps_low(P1, P2));
                    }
                }
    return assembleG(twos, G);
}

int main(int argc, char** argv) {
    int twos = argc > 1 ? std::atoi(argv[1]) : 1;
    Rng rng(314);
    std::vector<Mode> modes{{rng.spinor(1, 0), rng.complex_unit_disk(), +1},
                            {rng.spinor(1, 0), rng.complex_unit_disk(), -1},
                            {rng.spinor(1, 0), rng.complex_unit_disk(), +1}};
    SolutionField fld = superposition(twos, modes);
    Point4 x{0.3, -0.2, 0.6, 0.1};

    const int nc = 4;
    std::vector<std::vector<cplx>> cols(nc);
    const double h = 0.02;
    const double etainv[4] = {1, -1, -1, -1};
    for (int c = 0; c < nc; ++c) {
        auto field = [&](const Point4& p) { return candidate(c, jet_at(fld, p, 1)); };
        CDenseTensor base = field(x);
        const int rank = base.rank;
        std::vector<cplx> col;
        {
            std::vector<cplx> div(base.v.size() >> 2, cplx(0));
            for (int mu = 0; mu < 4; ++mu) {
                Point4 xp = x, xm = x, xp2 = x, xm2 = x;
                xp[mu] += h; xm[mu] -= h; xp2[mu] += 2 * h; xm2[mu] -= 2 * h;
                CDenseTensor fp = field(xp), fm = field(xm), fp2 = field(xp2), fm2 = field(xm2);
                for (size_t r = 0; r < div.size(); ++r) {
                    size_t f0 = (r << 2) | size_t(mu);
                    div[r] += etainv[mu] *
                              (8.0 * (fp.v[f0] - fm.v[f0]) - (fp2.v[f0] - fm2.v[f0])) / (12 * h);
                }
            }
            col.insert(col.end(), div.begin(), div.end());
        }
        auto with = [&](size_t f, int s, int mu) {
            return (f & ~(size_t(3) << (2 * s))) | (size_t(mu) << (2 * s));
        };
        for (int a = 1; a < rank; ++a)
            for (int b = a + 1; b < rank; ++b)
                for (size_t rest = 0; rest < (base.v.size() >> 4); ++rest) {
                    size_t f = 0;
                    int pos = 0;
                    for (int s = 0; s < rank; ++s) {
                        if (s == a || s == b) continue;
                        f |= ((rest >> (2 * pos)) & 3u) << (2 * s);
                        ++pos;
                    }
                    cplx tr = 0;
                    for (int mu = 0; mu < 4; ++mu)
                        tr += etainv[mu] * base.v[with(with(f, a, mu), b, mu)];
                    col.push_back(tr);
                }
        cols[c] = col;
    }

    size_t nr = cols[0].size();
    Eigen::MatrixXcd M(nr, nc);
    for (int c = 0; c < nc; ++c)
        for (size_t r = 0; r < nr; ++r) M(r, c) = cols[c][r];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
    std::printf("2s=%d singular values:", twos);
    for (int i = 0; i < nc; ++i) std::printf(" %.3e", svd.singularValues()(i));
    std::printf("\n");
    Eigen::VectorXcd v = svd.matrixV().col(nc - 1);
    // normalize on GA
    if (std::abs(v(0)) > 1e-10) v /= v(0);
    std::printf("combo (GA, GC, E, X1) = (1, %.9f, %.9f, %.9f)  [imag parts %.1e %.1e %.1e]\n",
                v(1).real(), v(2).real(), v(3).real(), v(1).imag(), v(2).imag(), v(3).imag());
    // magnitude of the combined tensor (is it the zero tensor?)
    CDenseTensor t0 = candidate(0, jet_at(fld, x, 1));
    CDenseTensor t1 = candidate(1, jet_at(fld, x, 1));
    CDenseTensor t2 = candidate(2, jet_at(fld, x, 1));
    CDenseTensor t3 = candidate(3, jet_at(fld, x, 1));
    double m = 0, m0 = 0;
    for (size_t i = 0; i < t0.v.size(); ++i) {
        cplx z = v(0) * t0.v[i] + v(1) * t1.v[i] + v(2) * t2.v[i] + v(3) * t3.v[i];
        m = std::max(m, std::abs(z));
        m0 = std::max(m0, std::abs(t0.v[i]));
    }
    std::printf("combined tensor magnitude: %.3e (GA magnitude %.3e)\n", m, m0);
    return 0;
}
