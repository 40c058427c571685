// dev scratch: lie_killing weight verification per type
#include <cstdio>

#include "spincons/killing.hpp"
#include "spincons/rng.hpp"

using namespace spincons;

int main() {
    Rng rng(21);
    KillingSpinor zeta = ckv(rng.hermitian_spinor(1), rng.uniform(-1, 1), rng.spinor(0, 2),
                             rng.spinor(2, 0), rng.hermitian_spinor(1));
    KillingSpinor z2 = ckv(rng.hermitian_spinor(1), rng.uniform(-1, 1), rng.spinor(0, 2),
                           rng.spinor(2, 0), rng.hermitian_spinor(1));

    auto res = [&](const KillingSpinor& ks) {
        double worst = 0;
        Rng prng(3);
        for (int r = 0; r < 5; ++r) worst = std::max(worst, killing_residual(ks, prng.vec4(-1.5, 1.5)));
        return worst;
    };

    KillingSpinor y = cky(rng.spinor(0, 2), rng.spinor(1, 1), rng.spinor(2, 0));
    KillingSpinor kk = ks_product(z2, zeta);                         // (2,2)
    KillingSpinor mixed = ks_product(z2, y);                         // (1,3)

    std::printf("L_z zeta  (1,1): %.3e\n", res(lie_killing(z2, zeta)));
    std::printf("L_z cky   (0,2): %.3e\n", res(lie_killing(y, zeta)));
    std::printf("L_z prod  (2,2): %.3e\n", res(lie_killing(kk, zeta)));
    std::printf("L_z mixed (1,3): %.3e\n", res(lie_killing(mixed, zeta)));

    // (1,1) case must equal the vector bracket
    KillingSpinor lie = lie_killing(z2, zeta);
    KillingSpinor br = ckv_bracket(zeta, z2);
    double d = 0;
    Rng prng(8);
    for (int r = 0; r < 5; ++r) {
        Point4 x = prng.vec4(-1, 1);
        d = std::max(d, (lie.eval(x) - br.eval(x)).max_norm());
    }
    std::printf("lie vs bracket [zeta, kappa]: %.3e\n", d);
    return 0;
}
