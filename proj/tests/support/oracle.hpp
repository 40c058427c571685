#pragma once

// Brute-force dense-tensor oracle for the symmetric-spinor algebra.  Expands a
// grid to all 2^p * 2^q components, contracts with explicit index loops and
// symmetrizes by direct enumeration.  Deliberately independent of the
// binomial-compressed implementation it checks.

#include <vector>

#include "spincons/spinor.hpp"

namespace spincons::testing {

struct DenseSpinor {
    int p = 0, q = 0;
    std::vector<cplx> v; // index = (unprimed bits) * 2^q + (primed bits); bit b = value of index b

    static int popcount(unsigned x) {
        int c = 0;
        while (x) { c += x & 1u; x >>= 1; }
        return c;
    }

    static DenseSpinor from_grid(const SymSpinor& g) {
        DenseSpinor d;
        d.p = g.p();
        d.q = g.q();
        d.v.assign(size_t(1) << (d.p + d.q), cplx(0));
        for (unsigned ub = 0; ub < (1u << d.p); ++ub)
            for (unsigned pb = 0; pb < (1u << d.q); ++pb)
                d.v[(size_t(ub) << d.q) | pb] = g.at(popcount(ub), popcount(pb));
        return d;
    }

    cplx at(unsigned ub, unsigned pb) const { return v[(size_t(ub) << q) | pb]; }
};

// Contract the first m unprimed and first n primed indices of a against the
// first m/n of b with the given kernels (a's index first), then symmetrize the
// free indices of each type by averaging over all assignments of equal
// one-count, and return the result as a grid.
inline SymSpinor dense_contract(const SymSpinor& ga, const SymSpinor& gb, int m, int n,
                                const Kernel& KU, const Kernel& KP) {
    DenseSpinor a = DenseSpinor::from_grid(ga);
    DenseSpinor b = DenseSpinor::from_grid(gb);
    const int pa = a.p - m, qa = a.q - n;   // free counts on a
    const int pb = b.p - m, qb = b.q - n;   // free counts on b
    const int P = pa + pb, Q = qa + qb;

    // Unsymmetrized contraction, free indices ordered (a's unprimed, b's
    // unprimed | a's primed, b's primed); contracted slots are the LOW bits.
    std::vector<cplx> unsym(size_t(1) << (P + Q), cplx(0));
    for (unsigned ub = 0; ub < (1u << P); ++ub) {
        unsigned ua = ub & ((1u << pa) - 1);        // a's free unprimed bits
        unsigned ubb = ub >> pa;                    // b's free unprimed bits
        for (unsigned pbits = 0; pbits < (1u << Q); ++pbits) {
            unsigned qaa = pbits & ((1u << qa) - 1);
            unsigned qbb = pbits >> qa;
            cplx acc(0);
            for (unsigned cu_a = 0; cu_a < (1u << m); ++cu_a)
                for (unsigned cu_b = 0; cu_b < (1u << m); ++cu_b)
                    for (unsigned cp_a = 0; cp_a < (1u << n); ++cp_a)
                        for (unsigned cp_b = 0; cp_b < (1u << n); ++cp_b) {
                            cplx w(1);
                            for (int r = 0; r < m; ++r)
                                w *= KU[(cu_a >> r) & 1u][(cu_b >> r) & 1u];
                            if (w == cplx(0)) continue;
                            for (int r = 0; r < n; ++r)
                                w *= KP[(cp_a >> r) & 1u][(cp_b >> r) & 1u];
                            if (w == cplx(0)) continue;
                            // contracted indices occupy the low bit positions
                            unsigned a_ub = cu_a | (ua << m);
                            unsigned a_pb = cp_a | (qaa << n);
                            unsigned b_ub = cu_b | (ubb << m);
                            unsigned b_pb = cp_b | (qbb << n);
                            acc += w * a.at(a_ub, a_pb) * b.at(b_ub, b_pb);
                        }
            unsym[(size_t(ub) << Q) | pbits] = acc;
        }
    }

    // Symmetrize: grid(I,J) = mean of unsym over assignments with those counts.
    SymSpinor out(P, Q);
    std::vector<double> cnt((P + 1) * (Q + 1), 0.0);
    std::vector<cplx> sum((P + 1) * (Q + 1), cplx(0));
    for (unsigned ub = 0; ub < (1u << P); ++ub)
        for (unsigned pbits = 0; pbits < (1u << Q); ++pbits) {
            int I = DenseSpinor::popcount(ub), J = DenseSpinor::popcount(pbits);
            sum[I * (Q + 1) + J] += unsym[(size_t(ub) << Q) | pbits];
            cnt[I * (Q + 1) + J] += 1.0;
        }
    for (int I = 0; I <= P; ++I)
        for (int J = 0; J <= Q; ++J) out.at(I, J) = sum[I * (Q + 1) + J] / cnt[I * (Q + 1) + J];
    return out;
}

// Dense check of the GL(2) rotation action sum_j L_{A_j}^{~B} a_{..B..}.
inline SymSpinor dense_rotate_lower_unprimed(const SymSpinor& ga,
                                             const std::array<std::array<cplx, 2>, 2>& L) {
    DenseSpinor a = DenseSpinor::from_grid(ga);
    SymSpinor out(a.p, a.q);
    std::vector<cplx> sum((a.p + 1) * (a.q + 1), cplx(0));
    std::vector<double> cnt((a.p + 1) * (a.q + 1), 0.0);
    for (unsigned ub = 0; ub < (1u << a.p); ++ub)
        for (unsigned pb = 0; pb < (1u << a.q); ++pb) {
            cplx acc(0);
            for (int slot = 0; slot < a.p; ++slot) {
                int Aval = (ub >> slot) & 1u;
                for (int B = 0; B < 2; ++B) {
                    unsigned ub2 = (ub & ~(1u << slot)) | (unsigned(B) << slot);
                    acc += L[Aval][B] * a.at(ub2, pb);
                }
            }
            int I = DenseSpinor::popcount(ub), J = DenseSpinor::popcount(pb);
            sum[I * (a.q + 1) + J] += acc;
            cnt[I * (a.q + 1) + J] += 1.0;
        }
    for (int I = 0; I <= a.p; ++I)
        for (int J = 0; J <= a.q; ++J) out.at(I, J) = sum[I * (a.q + 1) + J] / cnt[I * (a.q + 1) + J];
    return out;
}

} // namespace spincons::testing
