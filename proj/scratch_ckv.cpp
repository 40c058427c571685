// dev scratch: isolate ckv constructor blocks
#include <cstdio>

#include "spincons/killing.hpp"
#include "spincons/rng.hpp"

using namespace spincons;

static double res(const KillingSpinor& ks) {
    Rng prng(5);
    double worst = 0;
    for (int r = 0; r < 5; ++r) {
        Point4 x = prng.vec4(-1.5, 1.5);
        worst = std::max(worst, killing_residual(ks, x));
    }
    return worst;
}

int main() {
    Rng rng(9);
    SymSpinor z02(0, 2), z20(2, 0), z11(1, 1);
    SymSpinor a1 = rng.spinor(1, 1), a3 = rng.spinor(0, 2), a4 = rng.spinor(2, 0),
              a5 = rng.spinor(1, 1);
    cplx a2 = rng.complex_unit_disk();

    std::printf("a1 only : %.3e\n", res(ckv(a1, 0, z02, z20, z11)));
    std::printf("a2 only : %.3e\n", res(ckv(z11, a2, z02, z20, z11)));
    std::printf("a3 only : %.3e\n", res(ckv(z11, 0, a3, z20, z11)));
    std::printf("a4 only : %.3e\n", res(ckv(z11, 0, z02, a4, z11)));
    std::printf("a5 only : %.3e\n", res(ckv(z11, 0, z02, z20, a5)));

    SymSpinor b1 = rng.spinor(0, 2), b2 = rng.spinor(1, 1), b3 = rng.spinor(2, 0);
    std::printf("b1 only : %.3e\n", res(cky(b1, z11, z20)));
    std::printf("b2 only : %.3e\n", res(cky(z02, b2, z20)));
    std::printf("b3 only : %.3e\n", res(cky(z02, z11, b3)));

    // decomposition reconstruction for the dilation
    KillingSpinor dil = ckv(z11, 1.0, z02, z20, z11);
    CkvDecomp dec = ckv_decompose(dil);
    std::printf("dilation theta(0) = %.3f (expect 4)\n",
                std::real(dec.theta.eval_scalar({0, 0, 0, 0})));
    return 0;
}
