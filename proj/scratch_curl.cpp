// dev scratch: calibrate the spatial curl/div operators on plain 3-vector
// identities.
#include <cstdio>

#include "spincons/analysis.hpp"

// pull in internal helpers by duplicating their formulas here
using namespace spincons;

static PolyExpField spatial_deriv(const PolyExpField& f, int A, int Ap) {
    PolyExpField r = f.deriv_AA(A, Ap);
    if (A == Ap) r += f.deriv(0) * cplx(-kInvSqrt2);
    r.compress();
    return r;
}

static PolyExpField curl_field(const PolyExpField& F) {
    SymSpinor tup = vector_spinor(Vec4{1, 0, 0, 0});
    std::array<PolyExpField, 2> t1, t2;
    for (int A = 0; A < 2; ++A) {
        PolyExpField acc(F.p() - 1, F.q());
        for (int B = 0; B < 2; ++B)
            for (int Bp = 0; Bp < 2; ++Bp) {
                cplx w = tup.at(B, Bp);
                if (w == cplx(0)) continue;
                acc += spatial_deriv(pef_fix_unprimed(F, B), A, Bp) * w;
            }
        t1[A] = acc;
    }
    for (int Ap = 0; Ap < 2; ++Ap) {
        PolyExpField acc(F.p(), F.q() - 1);
        for (int B = 0; B < 2; ++B)
            for (int Bp = 0; Bp < 2; ++Bp) {
                cplx w = tup.at(B, Bp);
                if (w == cplx(0)) continue;
                acc += spatial_deriv(pef_fix_primed(F, Bp), B, Ap) * w;
            }
        t2[Ap] = acc;
    }
    PolyExpField m1 = merge_unprimed_fields(t1[0], t1[1]);
    PolyExpField m2 = merge_primed_fields(t2[0], t2[1]);
    return (m1 - m2) * cplx(0, 1);
}

static PolyExpField div_field(const PolyExpField& F) {
    PolyExpField r(F.p() - 1, F.q() - 1);
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) {
            double sgn = ((A + Ap) % 2 == 0) ? 1.0 : -1.0;
            PolyExpField d = spatial_deriv(F, 1 - A, 1 - Ap);
            r += pef_fix_unprimed(pef_fix_primed(d, Ap), A) * sgn;
        }
    r.compress();
    return r;
}

int main() {
    const double k = 1.3;
    // v = x1hat e^{ikz}: expect curl v = ik e^{ikz} x2hat, div v = 0
    {
        PolyExpField v(1, 1);
        SymSpinor vlow = covector_spinor(Vec4{0, -1, 0, 0}); // lower grid of x1hat
        v.append({SpinorPoly::constant(vlow), Vec4{0, 0, 0, k}});
        PolyExpField cv = curl_field(v);
        Point4 x{0.3, 0.1, -0.2, 0.7};
        CVec4 got = spinor_cvector(raise_all(cv.eval(x)));
        cplx phase = std::exp(cplx(0, k * x.z));
        std::printf("curl(x1 e^{ikz}) = (%.4f%+.4fi, %.4f%+.4fi, %.4f%+.4fi, %.4f%+.4fi)\n",
                    got.t.real(), got.t.imag(), got.x.real(), got.x.imag(), got.y.real(),
                    got.y.imag(), got.z.real(), got.z.imag());
        std::printf("  want y-component = %.4f%+.4fi\n", (cplx(0, k) * phase).real(),
                    (cplx(0, k) * phase).imag());
        std::printf("  div = %.3e (want 0)\n", std::abs(div_field(v).eval(x).at(0, 0)));
    }
    // v = x1hat e^{ikx}: div = ik e^{ikx}
    {
        PolyExpField v(1, 1);
        SymSpinor vlow = covector_spinor(Vec4{0, -1, 0, 0});
        v.append({SpinorPoly::constant(vlow), Vec4{0, k, 0, 0}});
        Point4 x{0.0, 0.4, 0.0, 0.0};
        cplx got = div_field(v).eval(x).at(0, 0);
        cplx want = cplx(0, k) * std::exp(cplx(0, k * x.x));
        std::printf("div(x1 e^{ikx}) = %.4f%+.4fi want %.4f%+.4fi\n", got.real(), got.imag(),
                    want.real(), want.imag());
    }
    return 0;
}
