#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"

using namespace spincons;

namespace {

KillingSpinor random_real_ckv(Rng& rng) {
    SymSpinor a3 = rng.spinor(0, 2);
    return ckv(rng.hermitian_spinor(1), rng.uniform(-1, 1), a3, conjugate(a3),
               rng.hermitian_spinor(1));
}

KillingSpinor random_complex_ckv(Rng& rng) {
    return ckv(rng.spinor(1, 1), rng.complex_unit_disk(), rng.spinor(0, 2), rng.spinor(2, 0),
               rng.spinor(1, 1));
}

SolutionField random_family(Rng& rng, int twos, int nmodes = 3) {
    std::vector<Mode> modes;
    for (int i = 0; i < nmodes; ++i)
        modes.push_back({rng.spinor(1, 0), rng.complex_unit_disk(), rng.uniform() < 0.5 ? 1 : -1});
    return superposition(twos, modes);
}

} // namespace

TEST_CASE("plane waves are on shell") {
    Rng rng(101);
    for (int twos : {1, 2, 3, 4}) {
        SolutionField f = random_family(rng, twos);
        Rng prng(7);
        for (int r = 0; r < 20; ++r) {
            Point4 x = prng.vec4(-2, 2);
            CHECK(equation_residual(f, x) < 1e-12);
        }
    }
    // pinned: s=1/2, alpha=o, f=1, sigma=+ has value o at the origin
    SolutionField w = plane_wave(1, o_spinor(), 1.0, +1);
    SymSpinor v = w.pef.eval({0, 0, 0, 0});
    CHECK(std::abs(v.at(0) - cplx(1)) < 1e-15);
    CHECK(std::abs(v.at(1)) < 1e-15);
    CHECK(equation_residual(w, {0.3, 1.2, -0.7, 0.4}) < 1e-14);

    CHECK_THROWS(plane_wave(1, SymSpinor(1, 0), 1.0, +1));  // zero mode spinor
}

TEST_CASE("corrupted mode is visibly off shell") {
    // break the null relation k = alpha conj(alpha) by perturbing k directly
    SolutionField f = plane_wave(2, o_spinor() + iota_spinor() * 0.3, cplx(1), +1);
    PolyExpField bad(2, 0);
    for (const auto& t : f.pef.terms()) {
        Vec4 k = t.k;
        k.t *= 1.3;  // no longer null
        bad.append({t.poly, k});
    }
    SolutionField g;
    g.twos = 2;
    g.pef = bad;
    CHECK(equation_residual(g, {0.2, -0.4, 0.8, 0.1}) > 0.1);
}

TEST_CASE("adjoint waves satisfy the adjoint equation") {
    Rng rng(33);
    for (int twos : {1, 2, 3, 4}) {
        AdjointField w = adjoint_wave(twos, rng.spinor(1, 0), rng.complex_unit_disk(),
                                      rng.uniform() < 0.5 ? 1 : -1);
        Rng prng(19);
        for (int r = 0; r < 10; ++r) CHECK(adjoint_residual(w, prng.vec4(-2, 2)) < 1e-12);
    }
    AdjointField z = adjoint_wave(2, o_spinor(), 0.0, +1);
    CHECK(z.pef.eval({1, 2, 3, 4}).max_norm() < 1e-15);
}

TEST_CASE("jets: first derivative matches Richardson finite differences") {
    Rng rng(55);
    SolutionField f = random_family(rng, 2);
    Point4 x{0.4, -0.3, 0.9, 0.2};
    Jet jet = jet_at(f, x, 2);
    CHECK(jet.derivs.size() == 3);
    CHECK((jet.value - f.pef.eval(x)).max_norm() < 1e-14);

    auto num_deriv = [&](int A, int Ap, double h) {
        SymSpinor acc(f.twos, 0);
        for (int mu = 0; mu < 4; ++mu) {
            cplx c = der_coef(A, Ap, mu);
            if (c == cplx(0)) continue;
            Point4 xp = x, xm = x, xp2 = x, xm2 = x;
            xp[mu] += h; xm[mu] -= h; xp2[mu] += 2 * h; xm2[mu] -= 2 * h;
            SymSpinor d = (f.pef.eval(xp) - f.pef.eval(xm)) * (8.0 / (12.0 * h)) -
                          (f.pef.eval(xp2) - f.pef.eval(xm2)) * (1.0 / (12.0 * h));
            acc += d * c;
        }
        return acc;
    };
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) {
            SymSpinor d1 = num_deriv(A, Ap, 0.02), d2 = num_deriv(A, Ap, 0.01);
            SymSpinor extrap = (d2 * 16.0 - d1) * (1.0 / 15.0);
            CHECK((extrap - jet.raw1[A][Ap]).max_norm() < 1e-9);
        }

    // derivs[1] is the symmetrization of raw1
    SymSpinor m00 = merge_primed(jet.raw1[0][0], jet.raw1[0][1]);
    SymSpinor m11 = merge_primed(jet.raw1[1][0], jet.raw1[1][1]);
    CHECK((merge_unprimed(m00, m11) - jet.derivs[1]).max_norm() < 1e-13);
}

TEST_CASE("linearity of jets and residual operators") {
    Rng rng(77);
    SolutionField a = random_family(rng, 3), b = random_family(rng, 3);
    cplx ca = rng.complex_unit_disk(), cb = rng.complex_unit_disk();
    SolutionField sum;
    sum.twos = 3;
    sum.pef = a.pef * ca + b.pef * cb;
    Point4 x{0.7, 0.1, -0.2, 0.5};
    SymSpinor lhs = jet_at(sum, x, 1).derivs[1];
    SymSpinor rhs = jet_at(a, x, 1).derivs[1] * ca + jet_at(b, x, 1).derivs[1] * cb;
    CHECK((lhs - rhs).max_norm() < 1e-12);
    CHECK(equation_residual(sum, x) < 1e-12);
}

TEST_CASE("duality: phase rotation, period four, jets uniform") {
    Rng rng(12);
    SolutionField f = random_family(rng, 2);
    SolutionField d1 = duality(f);
    SolutionField d4 = duality(duality(duality(d1)));
    Point4 x{0.3, 0.8, -0.5, 0.9};
    CHECK((d4.pef.eval(x) - f.pef.eval(x)).max_norm() < 1e-14);
    CHECK((d1.pef.eval(x) + f.pef.eval(x) * cplx(0, 1)).max_norm() < 1e-14);
    CHECK((jet_at(d1, x, 1).derivs[1] + jet_at(f, x, 1).derivs[1] * cplx(0, 1)).max_norm() < 1e-13);

    SolutionField z;
    z.twos = 2;
    z.pef = PolyExpField(2, 0);
    CHECK(duality(z).pef.eval(x).max_norm() == 0.0);
}

TEST_CASE("slie: translation gives the directional derivative") {
    Rng rng(40);
    SolutionField f = random_family(rng, 2);
    SymSpinor z02(0, 2), z20(2, 0), z11(1, 1);
    KillingSpinor tt = ckv(vector_spinor(Vec4{1, 0, 0, 0}), 0, z02, z20, z11);
    SolutionField g = slie(f, tt);
    Point4 x{0.2, -0.6, 0.3, 0.8};
    CHECK((g.pef.eval(x) - f.pef.deriv(0).eval(x)).max_norm() < 1e-13);
}

TEST_CASE("slie: dilation acts as x.d + (s+1) on plane waves") {
    // weight term (s+1)/4 * div zeta; calibrated by solution preservation
    SymSpinor z02(0, 2), z20(2, 0), z11(1, 1);
    KillingSpinor dil = ckv(z11, 1.0, z02, z20, z11);
    for (int twos : {1, 2, 4}) {
        SolutionField f = plane_wave(twos, o_spinor() * 0.8 + iota_spinor() * cplx(0.1, 0.4),
                                     cplx(1.3, -0.2), +1);
        SolutionField g = slie(f, dil);
        Point4 x{0.5, 0.25, -0.75, 1.0};
        Vec4 k = f.pef.terms()[0].k;
        cplx phase_rate(0, k.t * x.t + k.x * x.x + k.y * x.y + k.z * x.z);
        cplx factor = phase_rate + cplx(0.5 * twos + 1.0);
        CHECK((g.pef.eval(x) - f.pef.eval(x) * factor).max_norm() < 1e-12);
    }
}

TEST_CASE("slie preserves the solution space for random conformal Killing vectors") {
    Rng rng(2024);
    for (int twos : {1, 2, 3}) {
        SolutionField f = random_family(rng, twos, 2);
        for (int rep = 0; rep < 5; ++rep) {
            KillingSpinor zeta = random_complex_ckv(rng);
            SolutionField g = slie(f, zeta);
            Rng prng(61);
            for (int r = 0; r < 5; ++r) {
                Point4 x = prng.vec4(-1.5, 1.5);
                CHECK(equation_residual(g, x) < 1e-10);
            }
        }
    }
}

TEST_CASE("slie rejects a non-Killing vector field") {
    KillingSpinor bogus;
    bogus.k = 1;
    bogus.l = 1;
    SpinorPoly x = coordinate_spinor_poly();
    bogus.poly = combine_poly(combine_poly(x, x, 1, 1, kDelta, kDelta), x, 0, 0, kEps, kEps);
    SolutionField f = plane_wave(2, o_spinor(), 1.0, +1);
    CHECK_THROWS_AS(slie(f, bogus), std::domain_error);
}

TEST_CASE("slie commutator equals the bracket") {
    Rng rng(500);
    SolutionField f = random_family(rng, 1, 2);
    for (int rep = 0; rep < 5; ++rep) {
        KillingSpinor z1 = random_real_ckv(rng), z2 = random_real_ckv(rng);
        SolutionField ab = slie(slie(f, z2), z1);
        SolutionField ba = slie(slie(f, z1), z2);
        SolutionField br = slie(f, ckv_bracket(z1, z2));
        Rng prng(9);
        for (int r = 0; r < 5; ++r) {
            Point4 x = prng.vec4(-1, 1);
            SymSpinor lhs = ab.pef.eval(x) - ba.pef.eval(x);
            SymSpinor rhs = br.pef.eval(x);
            double scale = std::max(1.0, rhs.max_norm());
            CHECK((lhs - rhs).max_norm() / scale < 1e-9);
        }
    }
}

TEST_CASE("paper wave construction and normalization") {
    SolutionField f = paper_wave(2, cplx(1), 1.0, +1);
    // phi = sqrt2 conj(f) iota^(x)2 e^{-i w (t-z)}
    SymSpinor v = f.pef.eval({0, 0, 0, 0});
    CHECK(std::abs(v.at(2) - cplx(kSqrt2)) < 1e-13);
    CHECK(std::abs(v.at(0)) < 1e-15);
    CHECK(equation_residual(f, {0.3, 0.1, 0.9, -1.2}) < 1e-13);

    CHECK_THROWS(paper_wave(3, cplx(1), 1.0, +1));   // half-integer spin
    CHECK(paper_wave(2, cplx(0), 1.0, +1).pef.empty());
}

TEST_CASE("family JSON round trip") {
    Rng rng(808);
    SolutionField f = random_family(rng, 3);
    std::string js = family_to_json(f);
    SolutionField g = family_from_json(js);
    Rng prng(1);
    for (int r = 0; r < 10; ++r) {
        Point4 x = prng.vec4(-2, 2);
        CHECK((f.pef.eval(x) - g.pef.eval(x)).max_norm() < 1e-14);
    }
    CHECK_THROWS(family_from_json("{\"format\": \"other\"}"));
}
