// dev scratch: paper-wave density values and tensor structure
#include <cstdio>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"
#include "spincons/tensors.hpp"

using namespace spincons;

static SolutionField rand_family(Rng& rng, int twos, int nm = 2) {
    std::vector<Mode> modes;
    for (int i = 0; i < nm; ++i)
        modes.push_back({rng.spinor(1, 0), rng.complex_unit_disk(), rng.uniform() < 0.5 ? 1 : -1});
    return superposition(twos, modes);
}

int main() {
    CVec4 nhat{0, kInvSqrt2, cplx(0, kInvSqrt2), 0};

    for (int s : {1, 2}) {
        for (auto [fr, fi, om] : {std::tuple{2.0, 0.0, 3.0}, {1.0, 1.0, 1.0}}) {
            cplx f(fr, fi);
            SolutionField w = paper_wave(2 * s, f, om, +1);
            Jet jet = jet_at(w, {0, 0, 0, 0}, 1);
            cplx E = energy_density(jet), Z = zilch_density(jet);
            cplx W = chiral_complex_density(jet, nhat);
            double cp = 2.0 * W.real(), cm = -2.0 * W.imag();
            cplx f2 = f * f, fb2 = std::conj(f) * std::conj(f);
            std::printf(
                "s=%d f=(%g,%g) w=%g: E=%.6f want %.6f | Z=%.6f want %.6f | C+=%.6f want "
                "%.6f | C-=%.6f want %.6f\n",
                s, fr, fi, om, E.real(), E.imag(), std::norm(f), Z.real(), -om * std::norm(f), cp,
                (f2 + fb2).real() * om * om, cm, (cplx(0, 1) * om * om * (f2 - fb2)).real());
        }
    }

    // tensor structure on a random on-shell jet, s = 1 and s = 3/2
    Rng rng(2718);
    for (int twos : {1, 2, 3}) {
        SolutionField fld = rand_family(rng, twos);
        Jet jet = jet_at(fld, {0.3, -0.2, 0.6, 0.1}, 1);
        DenseTensor Vp = tensor_Vplus(jet), Vm = tensor_Vminus(jet);
        double scale = std::max(Vp.max_abs(), Vm.max_abs());
        std::printf("2s=%d Vscale=%.3e\n", twos, scale);
        std::printf("  sym(a1,a2): %.2e  skew(b1,c1): %.2e  pairint: %.2e\n",
                    dense_symmetry_defect(Vp, 0, 1) / scale, dense_skew_defect(Vp, 2, 3) / scale,
                    twos >= 2 ? dense_pair_interchange_defect(Vp, 2, 3, 4, 5) / scale : 0.0);
        // trace over slots within the last 4s+1 (skip slot 0)
        double tworst = 0;
        for (int a = 1; a < Vp.rank; ++a)
            for (int b = a + 1; b < Vp.rank; ++b)
                tworst = std::max(tworst, dense_trace_norm(Vp, a, b));
        std::printf("  trace-free(last 4s+1): %.2e\n", tworst / scale);
        DenseTensor hVp = dense_hodge_on_pair(Vp, 2, 3);
        DenseTensor hVm = dense_hodge_on_pair(Vm, 2, 3);
        double d1 = 0, d2 = 0;
        for (size_t i = 0; i < hVp.v.size(); ++i) {
            d1 = std::max(d1, std::abs(hVp.v[i] - Vm.v[i]));
            d2 = std::max(d2, std::abs(hVm.v[i] + Vp.v[i]));
        }
        std::printf("  *V+ - V-: %.2e   *V- + V+: %.2e\n", d1 / scale, d2 / scale);

        // T, Z structure
        SymSpinor T = tensor_T(jet), Z = tensor_Z(jet);
        DenseTensor Td = dense_from_sym(T), Zd = dense_from_sym(Z);
        double ttr = 0, ztr = 0;
        for (int a = 0; a < Td.rank; ++a)
            for (int b = a + 1; b < Td.rank; ++b) ttr = std::max(ttr, dense_trace_norm(Td, a, b));
        for (int a = 0; a < Zd.rank; ++a)
            for (int b = a + 1; b < Zd.rank; ++b) ztr = std::max(ztr, dense_trace_norm(Zd, a, b));
        std::printf("  T trace: %.2e  Z trace: %.2e (scales %.2e %.2e)\n", ttr / Td.max_abs(),
                    ztr / Zd.max_abs(), Td.max_abs(), Zd.max_abs());
    }
    return 0;
}
