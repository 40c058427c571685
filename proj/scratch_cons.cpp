// dev scratch: conservation smoke test for all current families
#include <cstdio>

#include "spincons/currents.hpp"
#include "spincons/rng.hpp"

using namespace spincons;

static KillingSpinor rand_real_ckv(Rng& rng) {
    SymSpinor a3 = rng.spinor(0, 2);
    return ckv(rng.hermitian_spinor(1), rng.uniform(-1, 1), a3, conjugate(a3),
               rng.hermitian_spinor(1));
}

static SolutionField rand_family(Rng& rng, int twos, int nm = 3) {
    std::vector<Mode> modes;
    for (int i = 0; i < nm; ++i)
        modes.push_back({rng.spinor(1, 0), rng.complex_unit_disk(), rng.uniform() < 0.5 ? 1 : -1});
    return superposition(twos, modes);
}

static void report(const char* name, const CurrentEval& c) {
    Rng prng(77);
    double dworst = 0, rworst = 0;
    for (int r = 0; r < 8; ++r) {
        Point4 x = prng.vec4(-1.2, 1.2);
        dworst = std::max(dworst, exact_divergence_residual(c, x));
        rworst = std::max(rworst, c.reality_defect(x) / std::max(1e-300, c.scale(x)));
    }
    std::printf("%-28s div=%.3e  imag=%.3e\n", name, dworst, rworst);
}

int main() {
    Rng rng(4321);
    for (int twos : {1, 2, 3, 4}) {
        std::printf("== 2s = %d\n", twos);
        SolutionField f = rand_family(rng, twos);
        KillingSpinor zeta = rand_real_ckv(rng);
        KillingSpinor Y = cky(rng.spinor(0, 2), rng.spinor(1, 1), rng.spinor(2, 0));
        AdjointField om = adjoint_wave(twos, rng.spinor(1, 0), rng.complex_unit_disk(), +1);

        report("W", elementary_current(om, f));
        for (int n = 0; n <= 2; ++n) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "T n=%d", n);
            report(buf, stress_energy(f, zeta, n));
            std::snprintf(buf, sizeof buf, "Z n=%d", n);
            report(buf, zilch_current(f, zeta, n));
            std::snprintf(buf, sizeof buf, "V n=%d", n);
            report(buf, chiral_current(f, Y, zeta, n));
        }
        // adjoint symmetry residuals
        KillingSpinor xi = unit_scalar_killing();
        if (twos >= 2) {
            std::vector<KillingSpinor> fac(twos - 1, zeta);
            xi = ks_product(std::span<const KillingSpinor>(fac));
        }
        std::vector<KillingSpinor> fy(twos, Y);
        KillingSpinor ups = ks_product(std::span<const KillingSpinor>(fy));
        AdjointSymmetryEval U = adjoint_symmetry_U(f, 0, zeta, xi);
        AdjointSymmetryEval V = adjoint_symmetry_V(f, 0, zeta, ups);
        Rng prng(12);
        double ur = 0, vr = 0;
        for (int r = 0; r < 6; ++r) {
            Point4 x = prng.vec4(-1, 1);
            ur = std::max(ur, adjoint_symmetry_residual(U, x));
            vr = std::max(vr, adjoint_symmetry_residual(V, x));
        }
        std::printf("adjsymm U: %.3e   V: %.3e\n", ur, vr);
    }

    // trivial current: divergence identically zero, reality with conj pair
    Rng trng(5);
    PolyExpField theta(0, 2);
    for (int i = 0; i < 2; ++i) {
        SymSpinor a = trng.spinor(1, 0);
        Vec4 k = mode_covector(a);
        theta.append({SpinorPoly::constant(trng.spinor(0, 2)), k});
    }
    CurrentEval tc = trivial_current(theta, theta.conj());
    report("trivial", tc);
    return 0;
}
