// dev scratch: eb split, densities via analysis, quadrature, rank
#include <cstdio>

#include "spincons/analysis.hpp"

using namespace spincons;

int main() {
    // eb_split of the reference wave: E + iB should be f nhat^(s) e^{i s w(t-z)}
    SolutionField w = paper_wave(2, cplx(1), 1.0, +1);
    EBPair eb = eb_split(w, {0, 0, 0, 0});
    // nhat^(1): E = x1hat/sqrt2, B = x2hat/sqrt2 at the origin
    Vec4 Ev = spinor_vector(raise_all(eb.E) * 1.0, 1e-8);
    Vec4 Bv = spinor_vector(raise_all(eb.B) * 1.0, 1e-8);
    std::printf("E = (%.4f %.4f %.4f %.4f)  B = (%.4f %.4f %.4f %.4f)\n", Ev.t, Ev.x, Ev.y, Ev.z,
                Bv.t, Bv.x, Bv.y, Bv.z);

    Rng rng(7);
    for (int twos : {1, 2, 3, 4}) {
        SolutionField f = random_commensurate_family(rng, twos, 3, kSqrt2 * 4.442882938158366,
                                                     2);
        double worst = 0, rec = 0;
        Rng prng(3);
        for (int r = 0; r < 6; ++r) {
            Point4 x = prng.vec4(-1, 1);
            worst = std::max(worst, split_residual(f, x));
            rec = std::max(rec, eb_reconstruction_defect(f, x));
        }
        std::printf("2s=%d split residual %.3e  reconstruction %.3e\n", twos, worst, rec);
    }

    // duality: (E,B) -> (-B, E)
    {
        Rng r2(21);
        SolutionField f = random_commensurate_family(r2, 2, 2, 6.283185307179586, 2);
        Point4 x{0.4, 0.8, 1.9, 0.3};
        EBPair a = eb_split(f, x), b = eb_split(duality(f), x);
        std::printf("duality: |E'+B| = %.3e  |B'-E| = %.3e\n", (b.E + a.B).max_norm(),
                    (b.B - a.E).max_norm());
    }

    // densities through the analysis API
    for (int s : {1, 2}) {
        DensityValues d = densities(paper_wave(2 * s, cplx(2), 3.0, +1), {0, 0, 0, 0},
                                    default_polarization());
        std::printf("s=%d: E=%.4f Z=%.4f C+=%.4f C-=%.4f (imag %.1e)\n", s, d.energy, d.zilch,
                    d.chiral_plus, d.chiral_minus, d.imag_defect);
    }

    // quadrature: constant density over L = 2pi box
    {
        const double L = 6.283185307179586;
        Rng r3(5);
        SolutionField f = random_commensurate_family(r3, 1, 2, L, 2);
        KillingSpinor tt = ckv(vector_spinor(Vec4{1, 0, 0, 0}), 0, SymSpinor(0, 2),
                               SymSpinor(2, 0), SymSpinor(1, 1));
        CurrentEval c = stress_energy(f, tt, 0);
        double q0 = conserved_quantity(c, 0.0, 11, L);
        double q1 = conserved_quantity(c, 0.37, 11, L);
        double q2 = conserved_quantity(c, 0.37, 13, L);
        std::printf("C(0)=%.10f C(0.37)=%.10f dN=%.2e  dT=%.2e\n", q0, q1, std::abs(q2 - q1),
                    std::abs(q1 - q0) / std::abs(q0));
    }

    // rank: s=1/2 T-currents (expect 1), s=1 (expect 15)
    {
        const double L = 6.283185307179586;
        auto gens = ckv_generators();
        for (int twos : {1, 2}) {
            std::vector<CurrentFactory> facs;
            auto basis = killing_basis(twos - 1, 0);
            for (const auto& xi : basis) {
                facs.push_back([xi, &gens](const SolutionField& fam) {
                    return density_current_T(fam, 0, gens[0], xi);
                });
            }
            Rng r4(99);
            std::vector<SolutionField> fams;
            for (size_t j = 0; j < facs.size() + 5; ++j)
                fams.push_back(random_commensurate_family(r4, twos, 3, L, 2));
            int rank = independence_rank(facs, fams, 0.0, 11, L);
            std::printf("2s=%d: currents=%zu rank=%d\n", twos, facs.size(), rank);
        }
    }
    return 0;
}
