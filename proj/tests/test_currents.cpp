#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincons/analysis.hpp"

using namespace spincons;

namespace {

KillingSpinor random_real_ckv(Rng& rng) {
    SymSpinor a3 = rng.spinor(0, 2);
    return ckv(rng.hermitian_spinor(1), rng.uniform(-1, 1), a3, conjugate(a3),
               rng.hermitian_spinor(1));
}

SolutionField random_family(Rng& rng, int twos, int nm = 3) {
    std::vector<Mode> modes;
    for (int i = 0; i < nm; ++i)
        modes.push_back({rng.spinor(1, 0), rng.complex_unit_disk(), rng.uniform() < 0.5 ? 1 : -1});
    return superposition(twos, modes);
}

double worst_exact_div(const CurrentEval& c, uint64_t seed = 77, int pts = 8) {
    Rng prng(seed);
    double w = 0;
    for (int r = 0; r < pts; ++r)
        w = std::max(w, exact_divergence_residual(c, prng.vec4(-1.2, 1.2)));
    return w;
}

double worst_reality(const CurrentEval& c, uint64_t seed = 78, int pts = 8) {
    Rng prng(seed);
    double w = 0;
    for (int r = 0; r < pts; ++r) {
        Point4 x = prng.vec4(-1.2, 1.2);
        w = std::max(w, c.reality_defect(x) / std::max(1e-300, c.scale(x)));
    }
    return w;
}

} // namespace

TEST_CASE("every current family is exactly conserved and real") {
    Rng rng(4321);
    for (int twos : {1, 2, 3, 4}) {
        SolutionField f = random_family(rng, twos);
        KillingSpinor zeta = random_real_ckv(rng);
        KillingSpinor Y = cky(rng.spinor(0, 2), rng.spinor(1, 1), rng.spinor(2, 0));
        AdjointField om = adjoint_wave(twos, rng.spinor(1, 0), rng.complex_unit_disk(), +1);

        CHECK(worst_exact_div(elementary_current(om, f)) < 1e-11);
        CHECK(worst_reality(elementary_current(om, f)) < 1e-12);
        for (int n = 0; n <= 2; ++n) {
            CurrentEval T = stress_energy(f, zeta, n);
            CurrentEval Z = zilch_current(f, zeta, n);
            CurrentEval V = chiral_current(f, Y, zeta, n);
            CHECK(worst_exact_div(T) < 1e-11);
            CHECK(worst_exact_div(Z) < 1e-11);
            CHECK(worst_exact_div(V) < 1e-11);
            CHECK(worst_reality(T) < 1e-12);
            CHECK(worst_reality(Z) < 1e-12);
            CHECK(worst_reality(V) < 1e-12);
        }
    }
}

TEST_CASE("linearity, zero propagation, spin mismatch") {
    Rng rng(15);
    SolutionField f = random_family(rng, 2);
    AdjointField om = adjoint_wave(2, rng.spinor(1, 0), cplx(1.5, 0), +1);
    CurrentEval w1 = elementary_current(om, f);
    AdjointField om3 = om;
    om3.pef = om.pef * cplx(3.0);
    CurrentEval w3 = elementary_current(om3, f);
    Point4 x{0.4, 0.2, -0.9, 0.6};
    Vec4 a = w1.eval(x), b = w3.eval(x);
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(b[mu] - 3.0 * a[mu]) < 1e-12);

    SolutionField z;
    z.twos = 2;
    z.pef = PolyExpField(2, 0);
    CHECK(elementary_current(om, z).scale(x) < 1e-15);
    AdjointField omBad = adjoint_wave(4, rng.spinor(1, 0), cplx(1), +1);
    CHECK_THROWS(elementary_current(omBad, f));
}

TEST_CASE("duality parity: T and Z even, V odd, pointwise") {
    Rng rng(2);
    for (int twos : {1, 2, 3, 4}) {
        SolutionField f = random_family(rng, twos, 2);
        SolutionField fd = duality(f);
        KillingSpinor zeta = random_real_ckv(rng);
        KillingSpinor Y = cky(rng.spinor(0, 2), rng.spinor(1, 1), rng.spinor(2, 0));
        CurrentEval T0 = stress_energy(f, zeta, 0), T1 = stress_energy(fd, zeta, 0);
        CurrentEval Z0 = zilch_current(f, zeta, 0), Z1 = zilch_current(fd, zeta, 0);
        CurrentEval V0 = chiral_current(f, Y, zeta, 0), V1 = chiral_current(fd, Y, zeta, 0);
        Rng prng(5);
        for (int r = 0; r < 6; ++r) {
            Point4 x = prng.vec4(-1, 1);
            double st = std::max(1e-300, T0.scale(x));
            CHECK((T1.psi.eval(x) - T0.psi.eval(x)).max_norm() / st < 1e-12);
            double sz = std::max(1e-300, Z0.scale(x));
            CHECK((Z1.psi.eval(x) - Z0.psi.eval(x)).max_norm() / sz < 1e-12);
            double sv = std::max(1e-300, V0.scale(x));
            CHECK((V1.psi.eval(x) + V0.psi.eval(x)).max_norm() / sv < 1e-12);
        }
    }
}

TEST_CASE("stress-energy reference value: t-contraction is 2|f|^2") {
    SymSpinor z02(0, 2), z20(2, 0), z11(1, 1);
    KillingSpinor tt = ckv(vector_spinor(Vec4{1, 0, 0, 0}), 0, z02, z20, z11);
    for (int s : {1, 2}) {
        cplx f(2.0, 0.0);
        SolutionField w = paper_wave(2 * s, f, 3.0, +1);
        CurrentEval T = stress_energy(w, tt, 0);
        cplx dens = T.t_density({0, 0, 0, 0});
        CHECK(std::abs(dens - cplx(2 * std::norm(f))) < 1e-10);
    }
}

TEST_CASE("hierarchy consistency: extension equals current of the Lie derivative") {
    Rng rng(3111);
    SolutionField f = random_family(rng, 2, 2);
    KillingSpinor zeta = random_real_ckv(rng);
    CurrentEval a = stress_energy(f, zeta, 2);
    CurrentEval b = stress_energy(slie(f, zeta), zeta, 1);
    CurrentEval az = zilch_current(f, zeta, 1);
    CurrentEval bz = zilch_current(slie(f, zeta), zeta, 0);
    Rng prng(8);
    for (int r = 0; r < 5; ++r) {
        Point4 x = prng.vec4(-1, 1);
        CHECK((a.psi.eval(x) - b.psi.eval(x)).max_norm() / std::max(1e-300, a.scale(x)) < 1e-12);
        CHECK((az.psi.eval(x) - bz.psi.eval(x)).max_norm() / std::max(1e-300, az.scale(x)) < 1e-12);
    }
}

TEST_CASE("adjoint symmetries satisfy their determining equations on shell") {
    Rng rng(606);
    for (int twos : {1, 2, 3}) {
        SolutionField f = random_family(rng, twos, 2);
        KillingSpinor zeta = random_real_ckv(rng);
        KillingSpinor xi = unit_scalar_killing();
        if (twos >= 2) {
            std::vector<KillingSpinor> fac(twos - 1, zeta);
            xi = ks_product(std::span<const KillingSpinor>(fac));
        }
        KillingSpinor Y = cky(rng.spinor(0, 2), rng.spinor(1, 1), rng.spinor(2, 0));
        std::vector<KillingSpinor> fy(twos, Y);
        KillingSpinor ups = ks_product(std::span<const KillingSpinor>(fy));
        for (int n = 0; n <= 1; ++n) {
            AdjointSymmetryEval U = adjoint_symmetry_U(f, n, zeta, xi);
            AdjointSymmetryEval V = adjoint_symmetry_V(f, n, zeta, ups);
            Rng prng(4);
            for (int r = 0; r < 5; ++r) {
                Point4 x = prng.vec4(-1, 1);
                CHECK(adjoint_symmetry_residual(U, x) < 1e-11);
                CHECK(adjoint_symmetry_residual(V, x) < 1e-10);
            }
        }
        // zero field gives the zero symmetry
        SolutionField z;
        z.twos = twos;
        z.pef = PolyExpField(twos, 0);
        AdjointSymmetryEval U0 = adjoint_symmetry_U(z, 0, zeta, xi);
        CHECK(U0.P.eval({1, 0.5, -2, 3}).max_norm() < 1e-15);
    }
}

TEST_CASE("current_from_adjoint: W reproduces the elementary current, U halves T") {
    Rng rng(9000);
    SolutionField f = random_family(rng, 2, 2);
    AdjointField om = adjoint_wave(2, rng.spinor(1, 0), rng.complex_unit_disk(), -1);
    CurrentEval w1 = elementary_current(om, f);
    CurrentEval w2 = current_from_adjoint(adjoint_symmetry_W(om), f);
    KillingSpinor zeta = random_real_ckv(rng);
    std::vector<KillingSpinor> fac(1, zeta);
    KillingSpinor xi = ks_product(std::span<const KillingSpinor>(fac));
    CurrentEval T = stress_energy(f, zeta, 0);
    CurrentEval H = current_from_adjoint(adjoint_symmetry_U(f, 0, zeta, xi), f);
    Rng prng(7);
    for (int r = 0; r < 5; ++r) {
        Point4 x = prng.vec4(-1, 1);
        CHECK((w1.psi.eval(x) - w2.psi.eval(x)).max_norm() < 1e-13);
        SymSpinor half = T.psi.eval(x) * 0.5;
        CHECK((H.psi.eval(x) - half).max_norm() / std::max(1e-300, T.scale(x)) < 1e-12);
    }
    CHECK(worst_exact_div(H) < 1e-11);
}

TEST_CASE("trivial currents: identically conserved, vanishing slice quantity") {
    Rng trng(5);
    const double L = 6.283185307179586;
    PolyExpField theta(0, 2);
    for (int i = 0; i < 2; ++i) {
        // commensurate periodic potential
        int mx = trng.int_sym(2), my = trng.int_sym(2), mz = 1 + (int)trng.below(2);
        Vec4 k{std::sqrt(double(mx * mx + my * my + mz * mz)), double(mx), double(my), double(mz)};
        theta.append({SpinorPoly::constant(trng.spinor(0, 2)), k});
    }
    CurrentEval c = trivial_current(theta, theta.conj());
    CHECK(worst_exact_div(c) < 1e-12);
    CHECK(worst_reality(c) < 1e-12);
    double q = conserved_quantity(c, 0.21, 9, L);
    double scale = c.scale({0.21, 1.0, 2.0, 3.0}) * L * L * L;
    CHECK(std::abs(q) / std::max(1e-300, scale) < 1e-9);

    PolyExpField z02(0, 2), z20(2, 0);
    CurrentEval zc = trivial_current(z02, z20);
    CHECK(zc.psi.eval({1, 2, 3, 4}).max_norm() < 1e-15);
}

TEST_CASE("precondition errors: non-Killing or complex zeta, wrong Y") {
    Rng rng(77);
    SolutionField f = random_family(rng, 2, 1);
    KillingSpinor bogus;
    bogus.k = 1;
    bogus.l = 1;
    SpinorPoly x = coordinate_spinor_poly();
    bogus.poly = combine_poly(combine_poly(x, x, 1, 1, kDelta, kDelta), x, 0, 0, kEps, kEps);
    CHECK_THROWS_AS(stress_energy(f, bogus, 0), std::domain_error);

    // complex (non-real) CKV rejected for the real quadratic currents
    KillingSpinor zc = ckv(rng.spinor(1, 1), cplx(0, 1), rng.spinor(0, 2), rng.spinor(2, 0),
                           rng.spinor(1, 1));
    CHECK_THROWS_AS(zilch_current(f, zc, 0), std::domain_error);

    KillingSpinor notY;
    notY.k = 0;
    notY.l = 2;
    notY.poly = SpinorPoly::constant(rng.spinor(0, 2));
    // a constant (0,2) spinor IS a CKY; corrupt it with a non-Killing poly
    MultiDeg d;
    d.e[1] = 3;
    notY.poly.add_term(d, rng.spinor(0, 2));
    KillingSpinor zeta = random_real_ckv(rng);
    CHECK_THROWS_AS(chiral_current(f, notY, zeta, 0), std::domain_error);
}
