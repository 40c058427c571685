#pragma once

#include <vector>

#include "spincons/solutions.hpp"

namespace spincons {

enum class TensorKind { T, Z, Vplus, Vminus };

//! Dense real tensor of the given rank over spacetime indices (all lower),
//! entries indexed by sum_i mu_i 4^i.
struct DenseTensor {
    int rank = 0;
    std::vector<double> v;

    explicit DenseTensor(int r = 0) : rank(r), v(size_t(1) << (2 * r), 0.0) {}
    double& at(size_t flat) { return v[flat]; }
    double at(size_t flat) const { return v[flat]; }
    double max_abs() const;
};

struct CDenseTensor {
    int rank = 0;
    std::vector<cplx> v;
    explicit CDenseTensor(int r = 0) : rank(r), v(size_t(1) << (2 * r), cplx(0)) {}
};

//! Energy tensor 2 phi conj(phi) as a (2s,2s) grid (all indices lower).
SymSpinor tensor_T(const Jet& jet);

//! Zilch tensor as a fully symmetrized (2s+1,2s+1) grid; needs jet order >= 1.
SymSpinor tensor_Z(const Jet& jet);

//! The chiral building block V(conj phi) as a dense rank-(4s+2) tensor with
//! slot order (a1, a2, b1, c1, .., b_{2s}, c_{2s}); complex entries.
CDenseTensor chiral_tensor_part(const Jet& jet);

//! Real chiral tensors V+ = V + conj V and V- = i(V - conj V).
DenseTensor tensor_Vplus(const Jet& jet);
DenseTensor tensor_Vminus(const Jet& jet);

//! Dense lower-index tensor of a totally symmetric (r,r) Hermitian grid.
DenseTensor dense_from_sym(const SymSpinor& S);

// Structure probes for the conserved-tensor properties.
double dense_symmetry_defect(const DenseTensor& T, int slot_a, int slot_b);
double dense_skew_defect(const DenseTensor& T, int slot_a, int slot_b);
//! Max-norm of the eta-trace over one slot pair.
double dense_trace_norm(const DenseTensor& T, int slot_a, int slot_b);
//! Hodge dual (1/2) eps_{ab}^{~~cd} acting on a skew slot pair (orientation
//! eps_{0123} = +1).
DenseTensor dense_hodge_on_pair(const DenseTensor& T, int slot_a, int slot_b);
//! Defect of T under interchange of the slot pairs (a1,a2) <-> (b1,b2).
double dense_pair_interchange_defect(const DenseTensor& T, int a1, int a2, int b1, int b2);

//! Full mixed contraction t_{A'}^{~A} ... of a (r,r) grid with r unit vectors
//! (the paper's density pattern); each factor equals minus the plain pairing.
cplx mixed_full_contract(const SymSpinor& S, const std::vector<SymSpinor>& uppers);

//! (1/2) t...t T and (1/2) t...t,t Z, with the timelike unit normal.
cplx energy_density(const Jet& jet);
cplx zilch_density(const Jet& jet);

//! Complex chirality scalar W(u): minus the contraction of V(conj phi) with
//! t,t on the first two slots and (t, conj u) on each skew pair.  The real
//! chiral densities are (2 Re W, -2 Im W).
cplx chiral_complex_density(const Jet& jet, const CVec4& u);

} // namespace spincons
