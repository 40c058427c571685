// dev scratch: pin the slie rotation sign and weight coefficient empirically
#include <cstdio>

#include "spincons/killing.hpp"
#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"

using namespace spincons;

static PolyExpField slie_variant(const PolyExpField& f, const KillingSpinor& zeta, double rot,
                                 double w) {
    CkvDecomp dec = ckv_decompose(zeta);
    PolyExpField out(f.p(), f.q());
    for (int B = 0; B < 2; ++B)
        for (int Bp = 0; Bp < 2; ++Bp) {
            SpinorPoly comp = poly_component(zeta.poly, B, Bp);
            if (comp.empty()) continue;
            out += scalar_poly_times(comp, f.deriv_AA(B, Bp));
        }
    out += rotate_field_lower_unprimed(f, dec.lambda * rot);
    out += scalar_poly_times(dec.theta * w, f);
    out.compress();
    return out;
}

int main() {
    Rng rng(123);
    // generic conformal Killing vector: all five parameter blocks nonzero
    KillingSpinor zeta = ckv(rng.hermitian_spinor(1), rng.uniform(-1, 1), rng.spinor(0, 2),
                             rng.spinor(2, 0), rng.hermitian_spinor(1));
    std::printf("zeta residual: %.2e\n", killing_residual(zeta, {0.3, 0.1, -0.2, 0.7}));

    for (int twos : {1, 2, 3, 4}) {
        SolutionField f = plane_wave(twos, rng.spinor(1, 0), cplx(0.7, -0.4), +1);
        SolutionField g = plane_wave(twos, rng.spinor(1, 0), cplx(-0.2, 0.9), -1);
        f.pef += g.pef;
        for (double rot : {1.0, -1.0}) {
            for (double w : {0.25, double(twos + 1) / 4.0, double(twos + 2) / 8.0,
                             double(twos) / 8.0 + 0.25, 0.5}) {
                SolutionField h;
                h.twos = twos;
                h.pef = slie_variant(f.pef, zeta, rot, w);
                double worst = 0;
                Rng prng(55);
                for (int r = 0; r < 6; ++r) {
                    Point4 x = prng.vec4(-1.5, 1.5);
                    worst = std::max(worst, equation_residual(h, x));
                }
                std::printf("2s=%d rot=%+.0f w=%.4f   residual=%.3e\n", twos, rot, w, worst);
            }
        }
    }
    return 0;
}
