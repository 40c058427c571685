// dev scratch: per-slot-pair trace diagnostics for the chiral tensor
#include <cstdio>

#include "spincons/rng.hpp"
#include "spincons/solutions.hpp"
#include "spincons/tensors.hpp"

using namespace spincons;

int main() {
    Rng rng(314);
    int twos = 1; // s = 1/2: rank 4 tensor, easiest to eyeball
    std::vector<Mode> modes{{rng.spinor(1, 0), rng.complex_unit_disk(), +1},
                            {rng.spinor(1, 0), rng.complex_unit_disk(), -1}};
    SolutionField fld = superposition(twos, modes);
    Jet jet = jet_at(fld, {0.3, -0.2, 0.6, 0.1}, 1);

    DenseTensor Vp = tensor_Vplus(jet);
    double scale = Vp.max_abs();
    std::printf("rank=%d scale=%.3e\n", Vp.rank, scale);
    for (int a = 0; a < Vp.rank; ++a)
        for (int b = a + 1; b < Vp.rank; ++b)
            std::printf("  trace(%d,%d) = %.3e\n", a, b, dense_trace_norm(Vp, a, b) / scale);
    std::printf("  sym01=%.2e skew23=%.2e\n", dense_symmetry_defect(Vp, 0, 1) / scale,
                dense_skew_defect(Vp, 2, 3) / scale);
    return 0;
}
