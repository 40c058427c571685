#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spincons/rng.hpp"
#include "spincons/spinor.hpp"
#include "support/oracle.hpp"

using namespace spincons;
using spincons::testing::dense_contract;
using spincons::testing::dense_rotate_lower_unprimed;

static double diff(const SymSpinor& a, const SymSpinor& b) { return (a - b).max_norm(); }

TEST_CASE("pinned dyad contractions") {
    SymSpinor o = o_spinor(), io = iota_spinor();

    // o_A iota^A = 1 with eps_{01} = +1
    SymSpinor s = transvect(o, io, 1, 0);
    CHECK(s.p() == 0);
    CHECK(std::abs(s.at(0, 0) - cplx(1)) < 1e-15);

    CHECK(transvect(o, o, 1, 0).max_norm() < 1e-15);
    CHECK(transvect(io, io, 1, 0).max_norm() < 1e-15);

    // sym_outer(o, o) keeps the pure grid
    SymSpinor oo = sym_outer(o, o);
    CHECK(std::abs(oo.at(0) - cplx(1)) < 1e-15);
    CHECK(std::abs(oo.at(1)) < 1e-15);
    CHECK(std::abs(oo.at(2)) < 1e-15);

    // sym_outer(o, iota) -> [0, 1/2, 0]
    SymSpinor oi = sym_outer(o, io);
    CHECK(std::abs(oi.at(0)) < 1e-15);
    CHECK(std::abs(oi.at(1) - cplx(0.5)) < 1e-15);
    CHECK(std::abs(oi.at(2)) < 1e-15);

    // transvect(o.iota, o.iota, 2, 0) = -1/2
    SymSpinor full = transvect(oi, oi, 2, 0);
    CHECK(std::abs(full.at(0, 0) - cplx(-0.5)) < 1e-15);
}

TEST_CASE("contract_general matches the dense oracle") {
    Rng rng(0x5917c0de);
    struct Case { int p1, q1, p2, q2, m, n; };
    std::vector<Case> cases;
    for (int p1 = 0; p1 <= 3; ++p1)
        for (int q1 = 0; q1 <= 3 - p1 + 1 && q1 <= 3; ++q1)
            for (int p2 = 0; p2 <= 3; ++p2)
                for (int q2 = 0; q2 <= 3; ++q2) {
                    if (p1 + q1 > 4 || p2 + q2 > 4) continue;
                    for (int m = 0; m <= std::min(p1, p2); ++m)
                        for (int n = 0; n <= std::min(q1, q2); ++n)
                            cases.push_back({p1, q1, p2, q2, m, n});
                }
    size_t checked = 0;
    for (const auto& c : cases) {
        SymSpinor a = rng.spinor(c.p1, c.q1);
        SymSpinor b = rng.spinor(c.p2, c.q2);
        for (const Kernel* K : {&kEps, &kDelta}) {
            SymSpinor got = contract_general(a, b, c.m, c.n, *K, *K);
            SymSpinor want = dense_contract(a, b, c.m, c.n, *K, *K);
            double scale = std::max(1.0, want.max_norm());
            CHECK(diff(got, want) / scale < 1e-13);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("larger valences against the oracle (p+q <= 6)") {
    Rng rng(0xabcdef12);
    struct Case { int p1, q1, p2, q2, m, n; };
    for (const auto& c : {Case{4, 2, 2, 2, 2, 1}, Case{3, 3, 3, 3, 3, 2}, Case{5, 1, 3, 1, 2, 1},
                          Case{6, 0, 4, 0, 3, 0}, Case{0, 6, 0, 4, 0, 3}, Case{2, 4, 4, 2, 1, 2}}) {
        SymSpinor a = rng.spinor(c.p1, c.q1);
        SymSpinor b = rng.spinor(c.p2, c.q2);
        SymSpinor got = transvect(a, b, c.m, c.n);
        SymSpinor want = dense_contract(a, b, c.m, c.n, kEps, kEps);
        CHECK(diff(got, want) / std::max(1.0, want.max_norm()) < 1e-13);
    }
}

TEST_CASE("antisymmetry and self-contraction properties") {
    Rng rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        SymSpinor a = rng.spinor(1, 0), b = rng.spinor(1, 0);
        SymSpinor ab = transvect(a, b, 1, 0), ba = transvect(b, a, 1, 0);
        CHECK(std::abs(ab.at(0) + ba.at(0)) < 1e-14);
    }
    // transvect(a, a, p, q) = 0 exactly for p+q odd
    for (auto [p, q] : {std::pair{1, 0}, {3, 0}, {1, 2}, {2, 1}, {3, 2}}) {
        SymSpinor a = rng.spinor(p, q);
        CHECK(transvect(a, a, p, q).max_norm() < 1e-12);
    }
}

TEST_CASE("conjugate is an antilinear involution and commutes with sym_outer") {
    Rng rng(99);
    SymSpinor a = rng.spinor(2, 1), b = rng.spinor(1, 2);
    CHECK(diff(conjugate(conjugate(a)), a) < 1e-15);
    CHECK(diff(conjugate(a * cplx(0, 1)), conjugate(a) * cplx(0, -1)) < 1e-15);
    CHECK(diff(conjugate(sym_outer(a, b)), sym_outer(conjugate(a), conjugate(b))) < 1e-13);

    SymSpinor obar = conjugate(o_spinor());
    CHECK(obar.p() == 0);
    CHECK(obar.q() == 1);
    CHECK(std::abs(obar.at(0, 0) - cplx(1)) < 1e-15);
}

TEST_CASE("raise/lower round trip and sign convention") {
    Rng rng(3);
    SymSpinor a = rng.spinor(3, 2);
    CHECK(diff(raise_all(lower_all(a)), a) < 1e-15);
    CHECK(diff(lower_all(raise_all(a)), a) < 1e-15);

    // iota^A = (1, 0): raise of grid (0,1)
    SymSpinor up = raise_all(iota_spinor());
    CHECK(std::abs(up.at(0) - cplx(1)) < 1e-15);
    CHECK(std::abs(up.at(1)) < 1e-15);
}

TEST_CASE("soldering map: pinned grids, round trip, metric identity") {
    SymSpinor tg = vector_spinor(Vec4{1, 0, 0, 0});
    CHECK(std::abs(tg.at(0, 0) - cplx(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(tg.at(1, 1) - cplx(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(tg.at(0, 1)) < 1e-15);

    SymSpinor ng = vector_spinor(Vec4{1, 0, 0, 1});
    CHECK(std::abs(ng.at(0, 0) - cplx(kSqrt2)) < 1e-15);
    CHECK(std::abs(ng.at(0, 1)) < 1e-15);
    CHECK(std::abs(ng.at(1, 0)) < 1e-15);
    CHECK(std::abs(ng.at(1, 1)) < 1e-15);
    // null vector -> rank 1 -> det 0
    cplx det = ng.at(0, 0) * ng.at(1, 1) - ng.at(0, 1) * ng.at(1, 0);
    CHECK(std::abs(det) < 1e-15);

    Rng rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        Vec4 v = rng.vec4(-5, 5), w = rng.vec4(-5, 5);
        Vec4 back = spinor_vector(vector_spinor(v));
        CHECK(std::abs(back.t - v.t) < 1e-13);
        CHECK(std::abs(back.x - v.x) < 1e-13);
        CHECK(std::abs(back.y - v.y) < 1e-13);
        CHECK(std::abs(back.z - v.z) < 1e-13);

        // eta(v,w) = eps eps v^{AA'} w^{BB'} = transvect of the upper grids
        SymSpinor ip = transvect(vector_spinor(v), vector_spinor(w), 1, 1);
        CHECK(std::abs(ip.at(0, 0) - cplx(minkowski(v, w))) < 1e-12);

        // 2 det(v^{AA'}) = eta(v,v)
        SymSpinor g = vector_spinor(v);
        cplx d = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
        CHECK(std::abs(2.0 * d - cplx(minkowski(v, v))) < 1e-12);

        // covector pairing k_{AA'} x^{AA'} = k_mu x^mu
        SymSpinor klow = covector_spinor(w);
        SymSpinor xp = vector_spinor(v);
        cplx pairing = 0;
        for (int A = 0; A < 2; ++A)
            for (int Ap = 0; Ap < 2; ++Ap) pairing += klow.at(A, Ap) * xp.at(A, Ap);
        double want = w.t * v.t + w.x * v.x + w.y * v.y + w.z * v.z;
        CHECK(std::abs(pairing - cplx(want)) < 1e-12);

        // lower_all(vector grid) is the covector grid of the index-lowered vector
        Vec4 vl{v.t, -v.x, -v.y, -v.z};
        CHECK(diff(lower_all(vector_spinor(v)), covector_spinor(vl)) < 1e-13);
    }

    SymSpinor bad(1, 1);
    bad.at(0, 1) = 1.0; // not Hermitian
    CHECK_THROWS_AS(spinor_vector(bad), std::domain_error);
}

TEST_CASE("merge, fix, rotate agree with direct enumeration") {
    Rng rng(4242);
    SymSpinor g0 = rng.spinor(2, 1), g1 = rng.spinor(2, 1);
    SymSpinor m = merge_unprimed(g0, g1);
    // dense check: value at count i = average over position of the new index
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 1; ++j) {
            cplx want = (double(3 - i) * (i <= 2 ? g0.at(i, j) : cplx(0)) +
                         double(i) * (i >= 1 ? g1.at(i - 1, j) : cplx(0))) / 3.0;
            CHECK(std::abs(m.at(i, j) - want) < 1e-14);
        }

    SymSpinor a = rng.spinor(3, 2);
    CHECK(diff(fix_unprimed(a, 0), [&] {
              SymSpinor r(2, 2);
              for (int i = 0; i <= 2; ++i)
                  for (int j = 0; j <= 2; ++j) r.at(i, j) = a.at(i, j);
              return r;
          }()) < 1e-15);

    std::array<std::array<cplx, 2>, 2> L = {{{rng.complex_unit_disk(), rng.complex_unit_disk()},
                                             {rng.complex_unit_disk(), rng.complex_unit_disk()}}};
    CHECK(diff(rotate_lower_unprimed(a, L), dense_rotate_lower_unprimed(a, L)) < 1e-13);
}

TEST_CASE("bilinearity and zero propagation") {
    Rng rng(11);
    SymSpinor a = rng.spinor(2, 1), b = rng.spinor(1, 1), z(1, 1);
    cplx c(0.3, -1.7);
    CHECK(diff(sym_outer(a * c, b), sym_outer(a, b) * c) < 1e-13);
    CHECK(sym_outer(z, a).max_norm() < 1e-15);
    CHECK(diff(sym_outer(a, b), sym_outer(b, a)) < 1e-13);
}
