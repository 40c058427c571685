#pragma once

#include <span>
#include <string>
#include <vector>

#include "spincons/poly.hpp"

namespace spincons {

//! Killing spinor of type (k,l): a polynomial in the coordinates with
//! SymSpinor(k,l) coefficients (upper indices), solving the conformally
//! invariant Killing spinor equation.  Type (1,1) is a conformal Killing
//! vector, type (0,2) a self-dual conformal Killing-Yano tensor.
struct KillingSpinor {
    int k = 0, l = 0;
    SpinorPoly poly;                // (k,l) upper components
    bool is_real = false;           // Hermitian type (k,k)_R
    bool is_self_dual_cky = false;  // type (0,2) building block
    std::string label;

    SymSpinor eval(const Point4& x) const { return poly.eval(x); }
};

//! The coordinate polynomial x^{AA'} as a (1,1) spinor poly.
SpinorPoly coordinate_spinor_poly();

//! General conformal Killing vector, quadratic in x:
//!   xi^{AA'} = a1^{AA'} + a2 x^{AA'} + a3^{A'B'} x^A_{~B'} + a4^{AB} x^{A'}_{~B}
//!              + x^{AB'} a5_{BB'} x^{BA'},
//! with a5 the special-conformal parameter given as a lower (1,1) grid.
KillingSpinor ckv(const SymSpinor& a1, cplx a2, const SymSpinor& a3, const SymSpinor& a4,
                  const SymSpinor& a5);

//! General self-dual conformal Killing-Yano tensor, quadratic in x:
//!   Y^{A'B'} = b1^{A'B'} + sym(b2^{AA'} x^{B'}_{~A}) + b3-quadratic.
KillingSpinor cky(const SymSpinor& b1, const SymSpinor& b2, const SymSpinor& b3);

//! Symmetrized product of Killing spinors (valences add).
KillingSpinor ks_product(std::span<const KillingSpinor> factors);
KillingSpinor ks_product(const KillingSpinor& a, const KillingSpinor& b);

//! Max-norm of the Killing equation d_{(B'(B} kappa_{A..)A'..)} at x,
//! relative to max(1, |kappa(x)|).
double killing_residual(const KillingSpinor& ks, const Point4& x);

//! Exact residual polynomial (all-lower, valence (k+1,l+1)); zero iff Killing.
SpinorPoly killing_residual_poly(const KillingSpinor& ks);

//! div zeta, lambda_{AB}, lambda-bar_{A'B'} of the decomposition
//! d_{AA'} zeta_{BB'} = (theta/4) eps_{AB} eps_{A'B'} + eps_{A'B'} lambda_{AB}
//!                      + eps_{AB} lambdabar_{A'B'}.
struct CkvDecomp {
    SpinorPoly theta;       // scalar
    SpinorPoly lambda;      // (2,0) lower
    SpinorPoly lambda_bar;  // (0,2) lower
};
CkvDecomp ckv_decompose(const KillingSpinor& zeta);

//! Spinorial Lie derivative of a Killing spinor along a conformal Killing
//! vector; preserves the Killing equation.  For type (1,1) it is the vector
//! field bracket.
KillingSpinor lie_killing(const KillingSpinor& ks, const KillingSpinor& zeta);

//! Vector-field commutator of two conformal Killing vectors.
KillingSpinor ckv_bracket(const KillingSpinor& z1, const KillingSpinor& z2);

//! 15 real conformal Killing vectors: 4 translations, 6 rotations/boosts,
//! dilation, 4 special conformal.
std::vector<KillingSpinor> ckv_generators();

//! 10 self-dual conformal Killing-Yano generators (complex basis).
std::vector<KillingSpinor> cky_generators();

//! Linearly independent spanning set for type (k, k+2l) Killing spinors,
//! built from symmetrized products of the generators and selected by rank on
//! polynomial coefficients.  Throws if k+l exceeds max_kl.
std::vector<KillingSpinor> killing_basis(int k, int twol, int max_kl = 4,
                                         double rank_tol = 1e-9);

//! Dimension found by the spanning+rank procedure (without keeping the basis).
int killing_rank_dimension(int k, int twol, double rank_tol = 1e-9);

//! Flatten a Killing spinor's polynomial coefficients into a dense vector over
//! a common monomial dictionary (for rank tests).
std::vector<cplx> killing_coeff_vector(const KillingSpinor& ks,
                                       const std::vector<uint32_t>& monomials);
std::vector<uint32_t> killing_monomial_dictionary(std::span<const KillingSpinor> list);

} // namespace spincons
