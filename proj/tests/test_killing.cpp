#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincons/killing.hpp"
#include "spincons/rng.hpp"

using namespace spincons;

namespace {

double residual_battery(const KillingSpinor& ks, uint64_t seed = 303, int pts = 20) {
    Rng rng(seed);
    double worst = 0;
    for (int r = 0; r < pts; ++r) worst = std::max(worst, killing_residual(ks, rng.vec4(-2, 2)));
    return worst;
}

} // namespace

TEST_CASE("generator sets pass the Killing equation") {
    for (const auto& g : ckv_generators()) CHECK(residual_battery(g) < 1e-12);
    for (const auto& g : cky_generators()) CHECK(residual_battery(g) < 1e-12);
    CHECK(ckv_generators().size() == 15);
    CHECK(cky_generators().size() == 10);
}

TEST_CASE("ckv: pinned examples") {
    SymSpinor z02(0, 2), z20(2, 0), z11(1, 1);
    // constant time translation
    KillingSpinor tt = ckv(vector_spinor(Vec4{1, 0, 0, 0}), 0, z02, z20, z11);
    CHECK(residual_battery(tt) < 1e-14);
    CHECK((tt.eval({3, 1, 4, 1}) - vector_spinor(Vec4{1, 0, 0, 0})).max_norm() < 1e-15);

    // dilation: xi = x, div = 4
    KillingSpinor dil = ckv(z11, 1.0, z02, z20, z11);
    CkvDecomp dec = ckv_decompose(dil);
    CHECK(std::abs(dec.theta.eval_scalar({0.4, 1.0, -0.7, 2.0}) - cplx(4)) < 1e-13);
    CHECK(dec.lambda.max_coeff_norm() < 1e-14);

    // random parameters stay exactly Killing
    Rng rng(5150);
    for (int rep = 0; rep < 5; ++rep) {
        KillingSpinor z = ckv(rng.spinor(1, 1), rng.complex_unit_disk(), rng.spinor(0, 2),
                              rng.spinor(2, 0), rng.spinor(1, 1));
        CHECK(residual_battery(z) < 1e-12);
    }
}

TEST_CASE("decomposition reconstructs the gradient of a CKV") {
    Rng rng(31337);
    KillingSpinor z = ckv(rng.spinor(1, 1), rng.complex_unit_disk(), rng.spinor(0, 2),
                          rng.spinor(2, 0), rng.spinor(1, 1));
    CkvDecomp dec = ckv_decompose(z);
    // check componentwise: d_{AA'} zeta_{BB'} = (theta/4) eps_AB eps_A'B'
    //                        + eps_A'B' lambda_AB + eps_AB lambdabar_A'B'
    Point4 x{0.3, -0.2, 0.9, 0.4};
    auto eps = [](int a, int b) { return a == b ? 0.0 : (a < b ? 1.0 : -1.0); };
    SymSpinor lam = dec.lambda.eval(x), lamb = dec.lambda_bar.eval(x);
    cplx th = dec.theta.eval_scalar(x);
    // lower zeta and differentiate exactly
    SpinorPoly low(1, 1);
    for (const auto& [kk, c] : z.poly.terms()) low.add_term(MultiDeg::from_key(kk), lower_all(c));
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) {
            SymSpinor d = poly_deriv_AA(low, A, Ap).eval(x);
            for (int B = 0; B < 2; ++B)
                for (int Bp = 0; Bp < 2; ++Bp) {
                    cplx want = 0.25 * th * eps(A, B) * eps(Ap, Bp) +
                                eps(Ap, Bp) * lam.component({A, B}, {}) +
                                eps(A, B) * lamb.component({}, {Ap, Bp});
                    CHECK(std::abs(d.at(B, Bp) - want) < 1e-12);
                }
        }
}

TEST_CASE("cky: residuals and flags") {
    Rng rng(747);
    for (int rep = 0; rep < 5; ++rep) {
        KillingSpinor y = cky(rng.spinor(0, 2), rng.spinor(1, 1), rng.spinor(2, 0));
        CHECK(residual_battery(y) < 1e-12);
        CHECK(y.k == 0);
        CHECK(y.l == 2);
    }
    SymSpinor b1(0, 2);
    b1.at(0, 0) = 1.0; // obar obar constant
    CHECK(residual_battery(cky(b1, SymSpinor(1, 1), SymSpinor(2, 0))) < 1e-14);
}

TEST_CASE("hand-broken coefficient pattern fails loudly") {
    KillingSpinor bogus;
    bogus.k = 1;
    bogus.l = 1;
    SpinorPoly x = coordinate_spinor_poly();
    bogus.poly = combine_poly(combine_poly(x, x, 1, 1, kDelta, kDelta), x, 0, 0, kEps, kEps);
    CHECK(residual_battery(bogus) > 0.1);

    KillingSpinor zero;
    zero.k = 1;
    zero.l = 1;
    zero.poly = SpinorPoly(1, 1);
    CHECK(residual_battery(zero) < 1e-15);
}

TEST_CASE("ks_product: valence addition, residual, single factor identity") {
    Rng rng(111);
    KillingSpinor z1 = ckv(rng.spinor(1, 1), rng.complex_unit_disk(), rng.spinor(0, 2),
                           rng.spinor(2, 0), rng.spinor(1, 1));
    KillingSpinor z2 = ckv(rng.spinor(1, 1), rng.complex_unit_disk(), rng.spinor(0, 2),
                           rng.spinor(2, 0), rng.spinor(1, 1));
    KillingSpinor p = ks_product(z1, z2);
    CHECK(p.k == 2);
    CHECK(p.l == 2);
    CHECK(residual_battery(p) < 1e-11);

    std::array<KillingSpinor, 1> one{z1};
    KillingSpinor same = ks_product(std::span<const KillingSpinor>(one));
    CHECK((same.eval({1, 2, 3, 4}) - z1.eval({1, 2, 3, 4})).max_norm() < 1e-14);

    // real zeta to an odd power is a real (k,k) spinor: Hermitian values
    auto gens = ckv_generators();
    KillingSpinor rho = gens[6];
    KillingSpinor r3 = ks_product(std::array<KillingSpinor, 3>{rho, rho, rho});
    Point4 x{0.1, 0.7, -0.3, 0.5};
    CHECK(hermiticity_defect(r3.eval(x)) < 1e-13);
    CHECK(r3.is_real);
}

TEST_CASE("lie_killing: bracket oracle and residual preservation") {
    Rng rng(999);
    auto gens = ckv_generators();
    // L along d_t of the dilation: [d_t, x.d] = d_t
    KillingSpinor lie = lie_killing(gens[10], gens[0]);
    KillingSpinor br = ckv_bracket(gens[0], gens[10]);
    Point4 x{0.9, -0.4, 0.2, 0.6};
    CHECK((lie.eval(x) - br.eval(x)).max_norm() < 1e-13);
    CHECK((br.eval(x) - gens[0].eval(x)).max_norm() < 1e-13);

    for (int rep = 0; rep < 5; ++rep) {
        KillingSpinor zeta = ckv(rng.hermitian_spinor(1), rng.uniform(-1, 1), rng.spinor(0, 2),
                                 rng.spinor(2, 0), rng.hermitian_spinor(1));
        KillingSpinor y = cky(rng.spinor(0, 2), rng.spinor(1, 1), rng.spinor(2, 0));
        KillingSpinor mix = ks_product(zeta, y);
        CHECK(residual_battery(lie_killing(y, zeta)) < 1e-10);
        CHECK(residual_battery(lie_killing(mix, zeta)) < 1e-10);
    }

    KillingSpinor znull;
    znull.k = 1;
    znull.l = 1;
    znull.poly = SpinorPoly(1, 1);
    KillingSpinor out = lie_killing(ckv_generators()[0], znull);
    CHECK(out.poly.max_coeff_norm() < 1e-15);
}

TEST_CASE("killing_basis counts match the closed-form dimension") {
    CHECK(killing_basis(0, 0).size() == 1);
    CHECK(killing_basis(1, 0).size() == 15);
    CHECK(killing_basis(0, 2).size() == 10);
    CHECK(killing_basis(2, 0).size() == 84);
    CHECK(killing_basis(1, 2).size() == 70);
    CHECK(killing_basis(0, 4).size() == 35);
    for (const auto& [k, twol] : std::vector<std::pair<int, int>>{{1, 0}, {0, 2}, {2, 0}}) {
        auto basis = killing_basis(k, twol);
        for (size_t i = 0; i < basis.size(); i += 5)
            CHECK(residual_battery(basis[i], 17, 6) < 1e-10);
    }
    CHECK_THROWS_AS(killing_basis(4, 4, 4), std::length_error);
}

TEST_CASE("realification: real (k,k) span has the complex count over the reals") {
    // products of the 15 real CKV generators are Hermitian; the rank of their
    // real/imaginary coefficient stack equals the complex dimension
    for (int k : {1, 2}) {
        auto basis = killing_basis(k, 0);
        std::vector<uint32_t> dict = killing_monomial_dictionary(basis);
        // stack [Re; Im] as real vectors and Gram-Schmidt over the reals
        std::vector<std::vector<double>> rbasis;
        int rank = 0;
        for (const auto& ks : basis) {
            auto v = killing_coeff_vector(ks, dict);
            std::vector<double> rv;
            rv.reserve(v.size() * 2);
            for (auto c : v) {
                rv.push_back(c.real());
                rv.push_back(c.imag());
            }
            double n0 = 0;
            for (double d : rv) n0 += d * d;
            n0 = std::sqrt(n0);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : rbasis) {
                    double proj = 0;
                    for (size_t i = 0; i < rv.size(); ++i) proj += b[i] * rv[i];
                    for (size_t i = 0; i < rv.size(); ++i) rv[i] -= proj * b[i];
                }
            double n1 = 0;
            for (double d : rv) n1 += d * d;
            n1 = std::sqrt(n1);
            if (n1 > 1e-9 * n0) {
                for (double& d : rv) d /= n1;
                rbasis.push_back(rv);
                ++rank;
            }
        }
        CHECK(rank == (int)basis.size());
    }
}
