// dev scratch: exhaustive equivariant bilinear search at s = 1/2 for a
// conserved, trace-free, self-duality-paired chiral tensor.
#include <Eigen/Dense>
#include <cstdio>
#include <functional>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"
#include "spincons/tensors.hpp"

using namespace spincons;

// F[A] = d_{A A'} conj(phi) as (0,2) grids (lower primed), on-shell symmetric.
struct FData {
    SymSpinor F[2];
};

static FData fdata(const Jet& jet) {
    FData d{{SymSpinor(0, 2), SymSpinor(0, 2)}};
    for (int A = 0; A < 2; ++A) {
        // symmetrize the primed pair (exact on shell)
        SymSpinor f0 = conjugate(jet.raw1[0][A]);  // d_{A 0'} chi
        SymSpinor f1 = conjugate(jet.raw1[1][A]);
        d.F[A] = merge_primed(f0, f1);
    }
    return d;
}

// spinor-level entry functions for each candidate; indices all lower:
// slots (A1,P1)(A2,P2)(B1,Q1)(C1,R1)
using EntryFn = std::function<cplx(const FData&, int A1, int P1, int A2, int P2, int B1, int Q1,
                                   int C1, int R1)>;

static double epsl(int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); }

int main() {
    // candidate list
    std::vector<std::pair<const char*, EntryFn>> cands;

    auto fval = [](const FData& d, int A, int p1, int p2) { return d.F[A].at(0, p1 + p2); };

    // cross: eps_{B1C1} F_{A2}(P1, Q1-group..) -- group symmetrization over
    // {Q1, R1} handled by averaging assignments
    cands.push_back({"GA", [&](const FData& d, int A1, int P1, int A2, int P2, int B1, int Q1,
                               int C1, int R1) {
                         // group = {Q1, R1}: average the 2 distributions
                         cplx g = 0.5 * (fval(d, A2, P1, Q1) * fval(d, A1, P2, R1) +
                                         fval(d, A2, P1, R1) * fval(d, A1, P2, Q1));
                         return epsl(B1, C1) * g;
                     }});
    cands.push_back({"GC", [&](const FData& d, int A1, int P1, int A2, int P2, int B1, int Q1,
                               int C1, int R1) {
                         cplx g = 0.5 * (fval(d, A1, P1, Q1) * fval(d, A2, P2, R1) +
                                         fval(d, A1, P1, R1) * fval(d, A2, P2, Q1));
                         return epsl(B1, C1) * g;
                     }});
    cands.push_back({"E", [&](const FData& d, int A1, int P1, int A2, int P2, int B1, int Q1,
                              int C1, int R1) {
                         // both free primed on one factor; group {Q1,R1} on the other
                         auto t1 = [&](int A, int q, int r) {
                             // (0,3) fully symmetric object value with ones q+r..
                             return d.F[A];
                         };
                         (void)t1;
                         // T1[A] has 3 primed; here F already symmetric (0,2) and
                         // factor two supplies both free primed: F_{A2}(P1,P2)
                         cplx g = 0.5 * (fval(d, A1, Q1, R1) * fval(d, A2, P1, P2) +
                                         fval(d, A2, Q1, R1) * fval(d, A1, P1, P2));
                         return epsl(B1, C1) * g;
                     }});
    // N-structure with the anti-self-dual pair metric eps_{B1C1} eps_{Q1R1}
    cands.push_back({"Npair", [&](const FData& d, int A1, int P1, int A2, int P2, int B1, int Q1,
                                  int C1, int R1) {
                         // N_{A1A2 P1P2} = eps^{E'F'} F_{A1}(P1,E') F_{A2}(P2,F'),
                         // symmetrized over the a-slots
                         cplx n = 0;
                         for (int e = 0; e < 2; ++e)
                             for (int f = 0; f < 2; ++f)
                                 n += epsl(e, f) * (fval(d, A1, P1, e) * fval(d, A2, P2, f) +
                                                    fval(d, A2, P2, e) * fval(d, A1, P1, f)) * 0.5;
                         return n * epsl(B1, C1) * epsl(Q1, R1);
                     }});
    // eta-insertion: eta_{a2 b1} N_{a1 c1} with (a1<->a2)-sym and [b1 c1]-skew
    cands.push_back({"etaN", [&](const FData& d, int A1, int P1, int A2, int P2, int B1, int Q1,
                                 int C1, int R1) {
                         auto N = [&](int A, int P, int C, int R) {
                             cplx n = 0;
                             for (int e = 0; e < 2; ++e)
                                 for (int f = 0; f < 2; ++f)
                                     n += epsl(e, f) * fval(d, A, P, e) * fval(d, C, R, f);
                             return n;
                         };
                         auto eta = [&](int X, int Xp, int Y, int Yp) {
                             return cplx(epsl(X, Y) * epsl(Xp, Yp));
                         };
                         // sym in a-slots, skew in (b,c)
                         cplx acc = 0;
                         acc += eta(A2, P2, B1, Q1) * N(A1, P1, C1, R1);
                         acc -= eta(A2, P2, C1, R1) * N(A1, P1, B1, Q1);
                         acc += eta(A1, P1, B1, Q1) * N(A2, P2, C1, R1);
                         acc -= eta(A1, P1, C1, R1) * N(A2, P2, B1, Q1);
                         return 0.5 * acc;
                     }});


    // eta_{a1a2} (x) skew-pair bilinear with both unprimed of F contracted
    cands.push_back({"etaPair", [&](const FData& d, int A1, int P1, int A2, int P2, int B1, int Q1,
                                    int C1, int R1) {
                         cplx m = 0;
                         for (int a = 0; a < 2; ++a)
                             for (int b = 0; b < 2; ++b)
                                 for (int e = 0; e < 2; ++e)
                                     for (int f = 0; f < 2; ++f)
                                         m += epsl(a, b) * epsl(e, f) * 0.5 *
                                              (fval(d, a, Q1, e) * fval(d, b, R1, f) +
                                               fval(d, a, R1, e) * fval(d, b, Q1, f));
                         return cplx(epsl(A1, A2) * epsl(P1, P2)) * epsl(B1, C1) * m;
                     }});
    // eta_{a1 b1} N_{a2 c1} (skew/sym projected)
    cands.push_back({"etaN2", [&](const FData& d, int A1, int P1, int A2, int P2, int B1, int Q1,
                                  int C1, int R1) {
                         auto N = [&](int A, int P, int C, int R) {
                             cplx n = 0;
                             for (int e = 0; e < 2; ++e)
                                 for (int f = 0; f < 2; ++f)
                                     n += epsl(e, f) * fval(d, A, P, e) * fval(d, C, R, f);
                             return n;
                         };
                         auto eta = [&](int X, int Xp, int Y, int Yp) {
                             return cplx(epsl(X, Y) * epsl(Xp, Yp));
                         };
                         cplx acc = 0;
                         acc += eta(A1, P1, B1, Q1) * N(A2, P2, C1, R1);
                         acc -= eta(A1, P1, C1, R1) * N(A2, P2, B1, Q1);
                         acc += eta(A2, P2, B1, Q1) * N(A1, P1, C1, R1);
                         acc -= eta(A2, P2, C1, R1) * N(A1, P1, B1, Q1);
                         // reversed N argument order variant folded in by symmetry below
                         return 0.5 * acc;
                     }});
    // same but with N arguments reversed (N is not symmetric)
    cands.push_back({"etaN3", [&](const FData& d, int A1, int P1, int A2, int P2, int B1, int Q1,
                                  int C1, int R1) {
                         auto N = [&](int A, int P, int C, int R) {
                             cplx n = 0;
                             for (int e = 0; e < 2; ++e)
                                 for (int f = 0; f < 2; ++f)
                                     n += epsl(e, f) * fval(d, C, R, e) * fval(d, A, P, f);
                             return n;
                         };
                         auto eta = [&](int X, int Xp, int Y, int Yp) {
                             return cplx(epsl(X, Y) * epsl(Xp, Yp));
                         };
                         cplx acc = 0;
                         acc += eta(A1, P1, B1, Q1) * N(A2, P2, C1, R1);
                         acc -= eta(A1, P1, C1, R1) * N(A2, P2, B1, Q1);
                         acc += eta(A2, P2, B1, Q1) * N(A1, P1, C1, R1);
                         acc -= eta(A2, P2, C1, R1) * N(A1, P1, B1, Q1);
                         return 0.5 * acc;
                     }});
    // assemble dense from an entry function
    auto to_dense = [&](const EntryFn& fn, const FData& d) {
        CDenseTensor out(4);
        for (int m0 = 0; m0 < 4; ++m0)
            for (int m1 = 0; m1 < 4; ++m1)
                for (int m2 = 0; m2 < 4; ++m2)
                    for (int m3 = 0; m3 < 4; ++m3) {
                        cplx acc = 0;
                        Vec4 v0, v1, v2, v3;
                        v0[m0] = v1[m1] = v2[m2] = v3[m3] = 1.0;
                        SymSpinor e0 = vector_spinor(v0), e1 = vector_spinor(v1),
                                  e2 = vector_spinor(v2), e3 = vector_spinor(v3);
                        for (int A1 = 0; A1 < 2; ++A1)
                            for (int P1 = 0; P1 < 2; ++P1)
                                for (int A2 = 0; A2 < 2; ++A2)
                                    for (int P2 = 0; P2 < 2; ++P2)
                                        for (int B1 = 0; B1 < 2; ++B1)
                                            for (int Q1 = 0; Q1 < 2; ++Q1)
                                                for (int C1 = 0; C1 < 2; ++C1)
                                                    for (int R1 = 0; R1 < 2; ++R1) {
                                                        cplx ee = e0.at(A1, P1) * e1.at(A2, P2) *
                                                                  e2.at(B1, Q1) * e3.at(C1, R1);
                                                        if (ee == cplx(0)) continue;
                                                        acc += ee * fn(d, A1, P1, A2, P2, B1, Q1,
                                                                       C1, R1);
                                                    }
                        out.v[size_t(m0) + 4 * m1 + 16 * m2 + 64 * m3] = acc;
                    }
        return out;
    };

    Rng rng(314);
    std::vector<Mode> modes{{rng.spinor(1, 0), rng.complex_unit_disk(), +1},
                            {rng.spinor(1, 0), rng.complex_unit_disk(), -1},
                            {rng.spinor(1, 0), rng.complex_unit_disk(), +1}};
    SolutionField fld = superposition(1, modes);
    Point4 x{0.3, -0.2, 0.6, 0.1};

    const int nc = (int)cands.size();
    std::vector<std::vector<cplx>> rows(nc);
    const double h = 0.02;
    const double etainv[4] = {1, -1, -1, -1};

    for (int c = 0; c < nc; ++c) {
        auto field = [&](const Point4& p) { return to_dense(cands[c].second, fdata(jet_at(fld, p, 1))); };
        CDenseTensor base = field(x);
        // conservation rows
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
        // trace rows on pairs within last 3 slots
        auto with = [&](size_t f, int s, int mu) {
            return (f & ~(size_t(3) << (2 * s))) | (size_t(mu) << (2 * s));
        };
        for (int a = 1; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                for (size_t rest = 0; rest < 16; ++rest) {
                    size_t f = 0;
                    int pos = 0;
                    for (int s = 0; s < 4; ++s) {
                        if (s == a || s == b) continue;
                        f |= ((rest >> (2 * pos)) & 3u) << (2 * s);
                        ++pos;
                    }
                    cplx tr = 0;
                    for (int mu = 0; mu < 4; ++mu)
                        tr += etainv[mu] * base.v[with(with(f, a, mu), b, mu)];
                    col.push_back(tr);
                }
        // hodge rows: *(Re part) - (-2 Im part) difference, i.e. duality pairing
        {
            DenseTensor Vp(4), Vm(4);
            for (size_t i = 0; i < base.v.size(); ++i) {
                Vp.v[i] = 2 * base.v[i].real();
                Vm.v[i] = -2 * base.v[i].imag();
            }
            DenseTensor hp = dense_hodge_on_pair(Vp, 2, 3);
            for (size_t i = 0; i < hp.v.size(); ++i) col.push_back(cplx(hp.v[i] - Vm.v[i]));
        }
        // symmetry rows
        {
            DenseTensor Vp(4);
            for (size_t i = 0; i < base.v.size(); ++i) Vp.v[i] = 2 * base.v[i].real();
            for (size_t f = 0; f < Vp.v.size(); ++f) {
                auto sl = [&](size_t ff, int s) { return int((ff >> (2 * s)) & 3u); };
                size_t g = with(with(f, 0, sl(f, 1)), 1, sl(f, 0));
                col.push_back(cplx(Vp.v[f] - Vp.v[g]));
                size_t g2 = with(with(f, 2, sl(f, 3)), 3, sl(f, 2));
                col.push_back(cplx(Vp.v[f] + Vp.v[g2]));
            }
        }
        rows[c] = col;
    }

    size_t nr = rows[0].size();
    Eigen::MatrixXcd M(nr, nc);
    for (int c = 0; c < nc; ++c)
        for (size_t r = 0; r < nr; ++r) M(r, c) = rows[c][r];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M, Eigen::ComputeFullV);
    std::printf("candidates:");
    for (auto& [n, f] : cands) std::printf(" %s", n);
    std::printf("\nsingular values:");
    for (int i = 0; i < nc; ++i) std::printf(" %.3e", svd.singularValues()(i));
    std::printf("\n");
    for (int k = 0; k < nc; ++k) {
        if (svd.singularValues()(k) > 1e-8) continue;
        Eigen::VectorXcd v = svd.matrixV().col(k);
        std::printf("null dir (sv=%.2e):", svd.singularValues()(k));
        for (int i = 0; i < nc; ++i) std::printf(" (%.4f,%.4f)", v(i).real(), v(i).imag());
        std::printf("\n");
    }
    // report genuine combos: normalize on GA and check tensor magnitude
    FData d0 = fdata(jet_at(fld, x, 1));
    std::vector<CDenseTensor> tens;
    for (int c = 0; c < nc; ++c) tens.push_back(to_dense(cands[c].second, d0));
    for (int k = 0; k < nc; ++k) {
        if (svd.singularValues()(k) > 1e-8) continue;
        Eigen::VectorXcd v = svd.matrixV().col(k);
        double m = 0;
        for (size_t i = 0; i < tens[0].v.size(); ++i) {
            cplx z = 0;
            for (int c = 0; c < nc; ++c) z += v(c) * tens[c].v[i];
            m = std::max(m, std::abs(z));
        }
        if (std::abs(v(0)) > 1e-6) v /= v(0);
        std::printf("null k=%d magnitude=%.3e coeffs:", k, m);
        for (int c = 0; c < nc; ++c)
            std::printf(" %s=(%.6f,%.1e)", cands[c].first, v(c).real(), v(c).imag());
        std::printf("\n");
    }
    return 0;
}
