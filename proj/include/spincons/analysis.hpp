#pragma once

#include <functional>
#include <vector>

#include "spincons/currents.hpp"
#include "spincons/rng.hpp"
#include "spincons/tensors.hpp"

namespace spincons {

//! |d_a Psi^a| by 4th-order central differences with one Richardson step,
//! normalized by |Psi|_inf x dominant wavenumber.
double divergence_residual(const CurrentEval& c, const Point4& x, double h = 0.02);

//! Largest spatial harmonic of the current's density relative to box L;
//! negative when some mode is incommensurate.
int max_harmonic(const CurrentEval& c, double L, double tol = 1e-9);

//! Equal-weight sum of the t-component density over the N^3 periodic grid at
//! time t (exact for trigonometric densities below the Nyquist bound).
//! Throws when modes are incommensurate with the box or N is too small.
double conserved_quantity(const CurrentEval& c, double t, int N, double L);

//! Electric/magnetic split.  Integer spin: Hermitian E and B of valence
//! (s,s).  Half-integer: the hybrid E of valence (s+1/2, s-1/2), B empty.
struct EBPair {
    int twos = 0;
    bool hybrid = false;
    SymSpinor E, B;
};

EBPair eb_split(const SolutionField& f, const Point4& x);

//! Max-norm residual of the curl/divergence form of the field equations,
//! normalized by the jet-1 scale.
double split_residual(const SolutionField& f, const Point4& x);

//! EBFid reconstruction defect: 2^ceil(s) t..t (E+iB) vs conj(phi).
double eb_reconstruction_defect(const SolutionField& f, const Point4& x);

//! The unit transverse polarization (x1hat + i x2hat)/sqrt2.
CVec4 default_polarization();

struct DensityValues {
    double energy = 0;   // particle density for half-integer spin
    double zilch = 0;
    double chiral_plus = 0;
    double chiral_minus = 0;
    double imag_defect = 0;
};

//! The Sec. 5.2 contracted tensor densities at x with polarization u.
DensityValues densities(const SolutionField& f, const Point4& x, const CVec4& u);

using CurrentFactory = std::function<CurrentEval(const SolutionField&)>;

//! Rank of M[i][j] = conserved_quantity(current_i on family_j), singular
//! values below tol x max treated as zero.  The quantity is sampled at t and
//! at one further slice time per family: for polynomial Killing data the box
//! functional is time-dependent, and the extra sample supplies independent
//! linear probes of the current space.
int independence_rank(const std::vector<CurrentFactory>& currents,
                      const std::vector<SolutionField>& families, double t, int N, double L,
                      double tol = 1e-8);

//! Seeded random plane-wave family with wavevectors commensurate with the box
//! (spatial components in (2pi/L) Z, |harmonic| <= max_h per axis).
SolutionField random_commensurate_family(Rng& rng, int twos, int nmodes, double L, int max_h);

} // namespace spincons
