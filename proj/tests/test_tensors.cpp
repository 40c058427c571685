#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincons/analysis.hpp"

using namespace spincons;

namespace {

SolutionField random_family(Rng& rng, int twos, int nm = 2) {
    std::vector<Mode> modes;
    for (int i = 0; i < nm; ++i)
        modes.push_back({rng.spinor(1, 0), rng.complex_unit_disk(), rng.uniform() < 0.5 ? 1 : -1});
    return superposition(twos, modes);
}

} // namespace

TEST_CASE("energy and zilch tensors: Hermitian, symmetric, trace-free on shell") {
    Rng rng(11);
    for (int twos : {1, 2, 3, 4}) {
        SolutionField f = random_family(rng, twos);
        for (int rep = 0; rep < 3; ++rep) {
            Jet jet = jet_at(f, rng.vec4(-1, 1), 1);
            SymSpinor T = tensor_T(jet), Z = tensor_Z(jet);
            CHECK(hermiticity_defect(T) < 1e-12 * std::max(1.0, T.max_norm()));
            CHECK(hermiticity_defect(Z) < 1e-12 * std::max(1.0, Z.max_norm()));
            DenseTensor Td = dense_from_sym(T), Zd = dense_from_sym(Z);
            double ts = std::max(Td.max_abs(), 1e-300), zs = std::max(Zd.max_abs(), 1e-300);
            for (int a = 0; a < Td.rank; ++a)
                for (int b = a + 1; b < Td.rank; ++b) {
                    CHECK(dense_trace_norm(Td, a, b) / ts < 1e-12);
                    CHECK(dense_symmetry_defect(Td, a, b) / ts < 1e-12);
                }
            for (int a = 0; a < Zd.rank; ++a)
                for (int b = a + 1; b < Zd.rank; ++b) {
                    CHECK(dense_trace_norm(Zd, a, b) / zs < 1e-12);
                    CHECK(dense_symmetry_defect(Zd, a, b) / zs < 1e-12);
                }
        }
    }
}

TEST_CASE("T on the reference wave, fully t-contracted and halved, gives |f|^2") {
    for (int s : {1, 2}) {
        cplx f(1.0, -2.0);
        SolutionField w = paper_wave(2 * s, f, 2.0, -1);
        Jet jet = jet_at(w, {0.6, 0.3, -0.1, 0.9}, 1);
        cplx e = energy_density(jet);
        CHECK(std::abs(e - cplx(std::norm(f))) < 1e-10);
    }
}

TEST_CASE("zilch density sign follows the frequency sign") {
    for (int sign : {+1, -1}) {
        SolutionField w = paper_wave(2, cplx(1.5, 0.5), 2.5, sign);
        Jet jet = jet_at(w, {0, 0, 0, 0}, 1);
        cplx z = zilch_density(jet);
        double want = -sign * 2.5 * std::norm(cplx(1.5, 0.5));
        CHECK(std::abs(z - cplx(want)) < 1e-10);
    }
}

TEST_CASE("chiral tensors: structure on random on-shell jets") {
    Rng rng(31);
    for (int twos : {1, 2, 3}) {
        SolutionField f = random_family(rng, twos);
        Jet jet = jet_at(f, rng.vec4(-1, 1), 1);
        DenseTensor Vp = tensor_Vplus(jet), Vm = tensor_Vminus(jet);
        double scale = std::max({Vp.max_abs(), Vm.max_abs(), 1e-300});

        CHECK(dense_symmetry_defect(Vp, 0, 1) / scale < 1e-12);
        CHECK(dense_symmetry_defect(Vm, 0, 1) / scale < 1e-12);
        for (int pi = 0; pi < twos; ++pi) {
            CHECK(dense_skew_defect(Vp, 2 + 2 * pi, 3 + 2 * pi) / scale < 1e-12);
            CHECK(dense_skew_defect(Vm, 2 + 2 * pi, 3 + 2 * pi) / scale < 1e-12);
        }
        if (twos >= 2) {
            CHECK(dense_pair_interchange_defect(Vp, 2, 3, 4, 5) / scale < 1e-12);
            CHECK(dense_pair_interchange_defect(Vm, 2, 3, 4, 5) / scale < 1e-12);
        }
        // traces among the skew-pair indices vanish
        for (int a = 2; a < Vp.rank; ++a)
            for (int b = a + 1; b < Vp.rank; ++b) {
                CHECK(dense_trace_norm(Vp, a, b) / scale < 1e-12);
                CHECK(dense_trace_norm(Vm, a, b) / scale < 1e-12);
            }
        // duality relation *V+- = +-Vmp on every skew pair
        for (int pi = 0; pi < twos; ++pi) {
            DenseTensor hp = dense_hodge_on_pair(Vp, 2 + 2 * pi, 3 + 2 * pi);
            DenseTensor hm = dense_hodge_on_pair(Vm, 2 + 2 * pi, 3 + 2 * pi);
            double d1 = 0, d2 = 0;
            for (size_t i = 0; i < hp.v.size(); ++i) {
                d1 = std::max(d1, std::abs(hp.v[i] - Vm.v[i]));
                d2 = std::max(d2, std::abs(hm.v[i] + Vp.v[i]));
            }
            CHECK(d1 / scale < 1e-12);
            CHECK(d2 / scale < 1e-12);
        }
    }
}

TEST_CASE("chiral tensors are conserved (finite differences)") {
    Rng rng(77);
    SolutionField f = random_family(rng, 1);
    Point4 x{0.25, -0.4, 0.55, 0.15};
    auto field = [&](const Point4& p) { return tensor_Vplus(jet_at(f, p, 1)); };
    DenseTensor base = field(x);
    const double h = 0.01;
    const double etainv[4] = {1, -1, -1, -1};
    std::vector<double> div(base.v.size() >> 2, 0.0);
    for (int mu = 0; mu < 4; ++mu) {
        Point4 xp = x, xm = x, xp2 = x, xm2 = x;
        xp[mu] += h; xm[mu] -= h; xp2[mu] += 2 * h; xm2[mu] -= 2 * h;
        DenseTensor fp = field(xp), fm = field(xm), fp2 = field(xp2), fm2 = field(xm2);
        for (size_t r = 0; r < div.size(); ++r) {
            size_t f0 = (r << 2) | size_t(mu);
            div[r] += etainv[mu] * (8 * (fp.v[f0] - fm.v[f0]) - (fp2.v[f0] - fm2.v[f0])) / (12 * h);
        }
    }
    double worst = 0;
    for (double d : div) worst = std::max(worst, std::abs(d));
    CHECK(worst / base.max_abs() < 1e-7);
}

TEST_CASE("jet order errors") {
    SolutionField w = paper_wave(2, cplx(1), 1.0, +1);
    Jet j0 = jet_at(w, {0, 0, 0, 0}, 0);
    CHECK_THROWS(tensor_Z(j0));
    CHECK_THROWS(chiral_tensor_part(j0));
}

TEST_CASE("chiral density values for both reference amplitudes and spins") {
    CVec4 u = default_polarization();
    struct Case { cplx f; double w; double cp, cm; };
    for (int s : {1, 2})
        for (const Case& c : {Case{cplx(2, 0), 3.0, 72.0, 0.0}, Case{cplx(1, 1), 1.0, 0.0, -4.0}}) {
            SolutionField wv = paper_wave(2 * s, c.f, c.w, +1);
            Jet jet = jet_at(wv, {0, 0, 0, 0}, 1);
            cplx W = chiral_complex_density(jet, u);
            CHECK(std::abs(2 * W.real() - c.cp) < 1e-9);
            CHECK(std::abs(-2 * W.imag() - c.cm) < 1e-9);
        }
}
