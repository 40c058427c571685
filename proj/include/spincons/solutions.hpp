#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincons/killing.hpp"
#include "spincons/polyexp.hpp"

namespace spincons {

//! Plane-wave mode metadata: field amplitude amp * alpha^{(x) 2s} with wave
//! covector k_{AA'} = alpha_A conj(alpha)_{A'} and phase exp(i sign k.x).
struct Mode {
    SymSpinor alpha;  // (1,0), nonzero
    cplx amp{0};
    int sign = +1;
};

//! Exact closed-form massless spin-s solution, a finite sum of
//! polynomial-times-null-exponential terms; valence (2s,0), stored lower.
struct SolutionField {
    int twos = 1;
    PolyExpField pef;
    std::vector<Mode> modes;  // kept only for pure plane-wave superpositions

    double spin() const { return 0.5 * twos; }
};

//! Solution of the adjoint field equations; valence (1, 2s-1) with the primed
//! indices stored upper (the natural contraction layout for currents).
struct AdjointField {
    int twos = 1;
    PolyExpField pef;
};

//! Wave covector of a mode spinor: k_{AA'} = alpha_A conj(alpha)_{A'}.
Vec4 mode_covector(const SymSpinor& alpha);

SolutionField plane_wave(int twos, const SymSpinor& alpha, cplx amp, int sign);

//! Superposition of plane-wave modes.
SolutionField superposition(int twos, const std::vector<Mode>& modes);

//! The Sec. 5.2 wave: E + iB = f nhat^{(s)} exp(i sign w (t - z)) with the
//! unit transverse polarization nhat = (xhat1 + i xhat2)/sqrt2.  Integer spin
//! only (twos even).
SolutionField paper_wave(int twos, cplx f, double omega, int sign);

AdjointField adjoint_wave(int twos, const SymSpinor& alpha, cplx amp, int sign);

//! Duality symmetry phi -> -i phi.
SolutionField duality(const SolutionField& f);

//! Conjugate field (0,2s) as a field object, for chiral-current assembly.
PolyExpField conjugate_field(const SolutionField& f);

//! Jet of symmetrized derivatives at a point, plus the raw first derivative.
struct Jet {
    int twos = 1;
    SymSpinor value;
    std::vector<SymSpinor> derivs;                     // derivs[p]: (2s+p, p)
    std::array<std::array<SymSpinor, 2>, 2> raw1;      // d_{AA'} phi
};

Jet jet_at(const SolutionField& f, const Point4& x, int order);

//! Max-norm of the massless field equation d^{A1}_{~A'} phi_{A1..A2s} at x.
double equation_residual(const SolutionField& f, const Point4& x);
//! Residual of the adjoint equation d^{A(A'1} omega^{A'2..A'2s)}_{~A}.
double adjoint_residual(const AdjointField& f, const Point4& x);

//! Jet-1 scale used to normalize residuals.
double field_scale(const SolutionField& f, const Point4& x);
double field_scale(const AdjointField& f, const Point4& x);

//! Conformally weighted Lie derivative along a conformal Killing vector;
//! maps solutions to solutions and stays inside the closed form.
SolutionField slie(const SolutionField& f, const KillingSpinor& zeta);
SolutionField slie_pow(const SolutionField& f, const KillingSpinor& zeta, int n);

//! Same operator on the raw field content (used for conjugate fields etc.).
PolyExpField slie_raw(const PolyExpField& f, const KillingSpinor& zeta, bool primed_field);

//! JSON serialization of plane-wave mode families (version-tagged).
std::string family_to_json(const SolutionField& f);
SolutionField family_from_json(const std::string& json_text);

} // namespace spincons
