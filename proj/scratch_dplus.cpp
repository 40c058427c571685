// dev scratch: pin the s=1/2 hybrid curl equation coefficient
#include <cstdio>

#include "spincons/analysis.hpp"

using namespace spincons;

static PolyExpField spatial_deriv(const PolyExpField& f, int A, int Ap) {
    PolyExpField r = f.deriv_AA(A, Ap);
    if (A == Ap) r += f.deriv(0) * cplx(-kInvSqrt2);
    r.compress();
    return r;
}

static PolyExpField dplus_curl(const PolyExpField& v) {
    SymSpinor tup = vector_spinor(Vec4{1, 0, 0, 0});
    std::array<PolyExpField, 2> comp;
    for (int A = 0; A < 2; ++A) {
        PolyExpField acc(0, 0);
        for (int B = 0; B < 2; ++B)
            for (int Bp = 0; Bp < 2; ++Bp) {
                cplx w = tup.at(B, Bp);
                if (w == cplx(0)) continue;
                acc += spatial_deriv(pef_fix_unprimed(v, B), A, Bp) * w;
            }
        comp[A] = acc * cplx(0, 2);
    }
    PolyExpField out(1, 0);
    auto lift = [&](const PolyExpField& g, int slot) {
        for (const auto& t : g.terms()) {
            SpinorPoly p(1, 0);
            for (const auto& [k, c] : t.poly.terms()) {
                SymSpinor s(1, 0);
                s.at(slot, 0) = c.at(0, 0);
                p.add_term(MultiDeg::from_key(k), s);
            }
            out.append({p, t.k});
        }
    };
    lift(comp[0], 0);
    lift(comp[1], 1);
    out.compress();
    return out;
}

int main() {
    Rng rng(88);
    std::vector<Mode> modes{{rng.spinor(1, 0), rng.complex_unit_disk(), +1},
                            {rng.spinor(1, 0), rng.complex_unit_disk(), -1}};
    SolutionField f = superposition(1, modes);
    // G = t-contract of conj(phi): reuse eb_split output路线 via analysis? have to rebuild
    // here: G = grid-level; use eb machinery through split pieces: G-pef.
    // Easiest: mimic eb_field with the public ops:
    PolyExpField chi = conjugate_field(f);
    // single t_A^{B'} contraction
    const cplx TAB[2][2] = {{0, -kInvSqrt2}, {kInvSqrt2, 0}};
    PolyExpField G(1, 0);
    for (const auto& t : chi.terms()) {
        SpinorPoly p(1, 0);
        for (const auto& [k, c] : t.poly.terms()) {
            SymSpinor s(1, 0);
            for (int A = 0; A < 2; ++A) {
                cplx v(0);
                for (int b = 0; b < 2; ++b) v += TAB[A][b] * c.at(0, b);
                s.at(A, 0) = v;
            }
            p.add_term(MultiDeg::from_key(k), s);
        }
        G.append({p, t.k});
    }
    G.compress();

    PolyExpField dt = G.deriv(0);
    PolyExpField dp = dplus_curl(G);
    Point4 x{0.2, -0.5, 0.8, 0.1};
    SymSpinor a = dt.eval(x), b = dp.eval(x);
    std::printf("dtG = (%.4f%+.4fi, %.4f%+.4fi)\n", a.at(0).real(), a.at(0).imag(), a.at(1).real(),
                a.at(1).imag());
    std::printf("D+G = (%.4f%+.4fi, %.4f%+.4fi)\n", b.at(0).real(), b.at(0).imag(), b.at(1).real(),
                b.at(1).imag());
    // ratio per component
    std::printf("ratio0 = (%.4f,%.4f) ratio1 = (%.4f,%.4f)\n", (a.at(0) / b.at(0)).real(),
                (a.at(0) / b.at(0)).imag(), (a.at(1) / b.at(1)).real(), (a.at(1) / b.at(1)).imag());
    return 0;
}
