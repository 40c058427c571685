#pragma once

#include "spincons/solutions.hpp"

namespace spincons {

enum class CurrentKind { W, T, Z, V, FromAdjoint, Trivial };
enum class AdjKind { W, U, V };

//! One conserved current Psi^a for a fixed solution and fixed Killing data,
//! kept in exact closed form as a (1,1) stored-lower field.
struct CurrentEval {
    CurrentKind kind = CurrentKind::W;
    int twos = 1;
    int order = 0;
    PolyExpField psi;

    //! Real 4-vector Psi^a at x (throws if the value is not Hermitian).
    Vec4 eval(const Point4& x) const;
    //! Imaginary defect of the value, as an absolute number.
    double reality_defect(const Point4& x) const;
    //! Complex t-component density t_{AA'} Psi^{AA'} (= Psi^t when real).
    cplx t_density(const Point4& x) const;
    //! Local magnitude used for normalizing residuals.
    double scale(const Point4& x) const;
};

//! Linear adjoint symmetry evaluator: a (1, 2s-1) field, unprimed index
//! stored lower and primed indices stored upper.
struct AdjointSymmetryEval {
    AdjKind kind = AdjKind::W;
    int twos = 1;
    int order = 0;
    PolyExpField P;
};

//! Elementary linear current  omega . conj(phi) + c.c.
CurrentEval elementary_current(const AdjointField& omega, const SolutionField& f);

//! Stress-energy current of order n:
//!   2 zeta^{..} x (2s-1) phi^{(n)} conj(phi)^{(n)}, phi^{(n)} = slie^n phi.
CurrentEval stress_energy(const SolutionField& f, const KillingSpinor& zeta, int n);

//! Zilch current of order n+1 (one Lie derivative inside).
CurrentEval zilch_current(const SolutionField& f, const KillingSpinor& zeta, int n);

//! Chiral current of order n+1, built on the rank-2s self-dual product
//! Upsilon = Y^{(x)2s}; includes the (2s+1)/(4s+1) gradient terms.
CurrentEval chiral_current(const SolutionField& f, const KillingSpinor& Y,
                           const KillingSpinor& zeta, int n);

AdjointSymmetryEval adjoint_symmetry_W(const AdjointField& omega);
//! U^{A'..}_A = xi^{.. ..} phi^{(n)}_{A ..}, xi of type (2s-1, 2s-1).
AdjointSymmetryEval adjoint_symmetry_U(const SolutionField& f, int n, const KillingSpinor& zeta,
                                       const KillingSpinor& xi);
//! V^{A'..}_A from Upsilon of type (0,4s) acting on conj(phi)^{(n)}.
AdjointSymmetryEval adjoint_symmetry_V(const SolutionField& f, int n, const KillingSpinor& zeta,
                                       const KillingSpinor& upsilon);

//! Residual of the adjoint symmetry equations at x (normalized).
double adjoint_symmetry_residual(const AdjointSymmetryEval& P, const Point4& x);

//! Scaling-symmetry integral formula with the lambda-integral done in closed
//! form: factor 1 for the field-independent W, 1/2 for the linear U and V.
CurrentEval current_from_adjoint(const AdjointSymmetryEval& P, const SolutionField& f);

//! Identically conserved curl current from potентials Theta (0,2) and
//! Theta-tilde (2,0); real-valued when theta_tilde = conj(theta).
CurrentEval trivial_current(const PolyExpField& theta, const PolyExpField& theta_tilde);

//! Exact divergence D^{AA'} Psi_{AA'} as a scalar field.
PolyExpField exact_divergence(const CurrentEval& c);
//! Normalized pointwise magnitude of the exact divergence.
double exact_divergence_residual(const CurrentEval& c, const Point4& x);

//! The real-valued currents arising from the integral formula for the linear
//! adjoint symmetries (the weight-w basis representatives).
CurrentEval density_current_T(const SolutionField& f, int n, const KillingSpinor& zeta,
                              const KillingSpinor& xi);
CurrentEval density_current_Z(const SolutionField& f, int n, const KillingSpinor& zeta,
                              const KillingSpinor& xi);
CurrentEval density_current_V(const SolutionField& f, int n, const KillingSpinor& zeta,
                              const KillingSpinor& upsilon);

//! Unit scalar Killing spinor (the type (0,0) basis), for s = 1/2 cases.
KillingSpinor unit_scalar_killing();

} // namespace spincons
