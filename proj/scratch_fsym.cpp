// dev scratch: on-shell primed symmetry of d_{AA'} conj(phi)
#include <cstdio>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"

using namespace spincons;

int main() {
    Rng rng(99);
    int twos = 2;
    std::vector<Mode> modes{{rng.spinor(1, 0), rng.complex_unit_disk(), +1},
                            {rng.spinor(1, 0), rng.complex_unit_disk(), -1}};
    SolutionField fld = superposition(twos, modes);
    Point4 x{0.3, -0.2, 0.6, 0.1};
    Jet jet = jet_at(fld, x, 1);

    // route 1: conjugate of the raw derivative with swapped index values
    // route 2: direct derivative of the conjugate field
    PolyExpField chi = conjugate_field(fld);
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) {
            SymSpinor viaJet = conjugate(jet.raw1[Ap][A]);
            SymSpinor direct = chi.deriv_AA(A, Ap).eval(x);
            std::printf("A=%d A'=%d  | conj-route vs direct: %.3e\n", A, Ap,
                        (viaJet - direct).max_norm());
        }

    // primed symmetry: F[A][1'].at(0,j) should equal F[A][0'].at(0,j+1)
    for (int A = 0; A < 2; ++A) {
        SymSpinor F0 = chi.deriv_AA(A, 0).eval(x);
        SymSpinor F1 = chi.deriv_AA(A, 1).eval(x);
        double worst = 0;
        for (int j = 0; j < twos; ++j)
            worst = std::max(worst, std::abs(F1.at(0, j) - F0.at(0, j + 1)));
        std::printf("A=%d  primed-symmetry defect: %.3e\n", A, worst);
    }

    // unprimed symmetry of d phi (the field-side on-shell property)
    for (int Ap = 0; Ap < 2; ++Ap) {
        SymSpinor D0 = jet.raw1[0][Ap];
        SymSpinor D1 = jet.raw1[1][Ap];
        double worst = 0;
        for (int i = 0; i < twos; ++i)
            worst = std::max(worst, std::abs(D1.at(i, 0) - D0.at(i + 1, 0)));
        std::printf("A'=%d  unprimed-symmetry defect (d phi): %.3e\n", Ap, worst);
    }
    return 0;
}
