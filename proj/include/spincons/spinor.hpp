#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spincons {

using cplx = std::complex<double>;

constexpr double kSqrt2 = 1.4142135623730950488016887242;
constexpr double kInvSqrt2 = 0.7071067811865475244008443621;

//! Real 4-vector (or covector; variance is by context) in coordinates (t,x,y,z).
struct Vec4 {
    double t = 0, x = 0, y = 0, z = 0;

    double operator[](int mu) const {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
    double& operator[](int mu) {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
    Vec4 operator+(const Vec4& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    Vec4 operator-(const Vec4& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    Vec4 operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
    bool operator==(const Vec4& o) const { return t == o.t && x == o.x && y == o.y && z == o.z; }
};

using Point4 = Vec4;

//! Complex 4-vector, used for complex polarizations.
struct CVec4 {
    cplx t{0}, x{0}, y{0}, z{0};
    cplx operator[](int mu) const {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
};

// Minkowski inner product, signature (+,-,-,-). Same formula for two covectors
// (then it is the inverse-metric pairing).
inline double minkowski(const Vec4& a, const Vec4& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}
inline cplx minkowski(const CVec4& a, const CVec4& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

double binom(int n, int k);

//! Totally symmetric two-component spinor of valence (p,q): p unprimed and q
//! primed indices.  comps(i,j) is the value of any component with exactly i
//! unprimed and j primed indices equal to 1 in the fixed dyad.  Whether the
//! indices are upper or lower is tracked by the caller; raise_all/lower_all
//! convert between the two layouts.
class SymSpinor {
  public:
    SymSpinor() : p_(0), q_(0), c_(1, cplx(0)) {}
    SymSpinor(int p, int q)
        : p_(p), q_(q), c_(static_cast<size_t>((p + 1) * (q + 1)), cplx(0)) {
        if (p < 0 || q < 0) throw std::invalid_argument("negative spinor valence");
    }

    int p() const { return p_; }
    int q() const { return q_; }

    cplx at(int i, int j = 0) const { return c_[static_cast<size_t>(i * (q_ + 1) + j)]; }
    cplx& at(int i, int j = 0) { return c_[static_cast<size_t>(i * (q_ + 1) + j)]; }

    //! Component with the given lists of index values (valid by symmetry).
    cplx component(const std::vector<int>& unprimed, const std::vector<int>& primed) const;

    const std::vector<cplx>& raw() const { return c_; }

    SymSpinor& operator+=(const SymSpinor& o);
    SymSpinor& operator-=(const SymSpinor& o);
    SymSpinor& operator*=(cplx s);
    SymSpinor operator+(const SymSpinor& o) const { SymSpinor r = *this; r += o; return r; }
    SymSpinor operator-(const SymSpinor& o) const { SymSpinor r = *this; r -= o; return r; }
    SymSpinor operator*(cplx s) const { SymSpinor r = *this; r *= s; return r; }
    SymSpinor operator-() const { return *this * cplx(-1); }

    double max_norm() const;
    bool is_zero(double tol = 0.0) const { return max_norm() <= tol; }

  private:
    int p_, q_;
    std::vector<cplx> c_;
};

inline SymSpinor operator*(cplx s, const SymSpinor& a) { return a * s; }

// ---------------------------------------------------------------------------
// Dyad and soldering constants.
//
// Stored-lower dyad components: o_A = (1,0), iota_A = (0,1); eps_{01} = +1 and
// eps^{01} = +1 with raising xi^A = eps^{AB} xi_B, lowering xi_B = xi^A eps_{AB}.
// Then o_A iota^A = 1 and transvect(o, iota, 1, 0) = +1.
// ---------------------------------------------------------------------------

SymSpinor o_spinor();     //!< (1,0) grid [1,0]
SymSpinor iota_spinor();  //!< (1,0) grid [0,1]

// 2x2 contraction kernels, indexed K[a_index][b_index].
using Kernel = std::array<std::array<cplx, 2>, 2>;
extern const Kernel kEps;    // eps^{AB}, a's index first
extern const Kernel kDelta;  // plain pairing for an upper-lower pair

//! Symmetrized contraction of m unprimed and n primed index pairs between a
//! and b (one index from each), with per-pair kernels; the remaining free
//! indices are totally symmetrized within each group.
SymSpinor contract_general(const SymSpinor& a, const SymSpinor& b, int m, int n,
                           const Kernel& KU, const Kernel& KP);

//! Total symmetrization of the tensor product a (x) b.
SymSpinor sym_outer(const SymSpinor& a, const SymSpinor& b);

//! eps-contraction: each unprimed pair contributes eps^{AB} a_{..A..} b_{..B..}
//! (a's index first), likewise primed pairs; the remainder is symmetrized.
//! Both arguments are taken in the stored-lower layout.
SymSpinor transvect(const SymSpinor& a, const SymSpinor& b, int m, int n);

//! Plain pairing of m unprimed and n primed index pairs (a upper vs b lower,
//! or vice versa; the kernel is the identity either way).
SymSpinor pair_contract(const SymSpinor& a, const SymSpinor& b, int m, int n);

//! Complex conjugation: swaps index types, comps'(j,i) = conj(comps(i,j)).
SymSpinor conjugate(const SymSpinor& a);

//! Raise (lower) every index: up(i,j) = (-1)^{i+j} low(p-i, q-j) and
//! low(i,j) = (-1)^{(p-i)+(q-j)} up(p-i, q-j).
SymSpinor raise_all(const SymSpinor& a);
SymSpinor lower_all(const SymSpinor& a);

//! Symmetrize one extra unprimed index onto grids g0, g1 (the B=0 and B=1
//! components of O_{B A_1..A_p}): M(i) = ((p+1-i) g0(i) + i g1(i-1)) / (p+1).
SymSpinor merge_unprimed(const SymSpinor& g0, const SymSpinor& g1);
SymSpinor merge_primed(const SymSpinor& g0, const SymSpinor& g1);

//! Fix one unprimed (primed) index to the value v, dropping it from the grid.
SymSpinor fix_unprimed(const SymSpinor& a, int v);
SymSpinor fix_primed(const SymSpinor& a, int v);

// GL(2) generator action sum_j L_{A_j}^{~B} a_{.. B ..} on stored-lower grids,
// with L[A][B] the mixed matrix; and the upper-index counterpart
// -sum_j L_B^{~A_j} a^{.. B ..}.
SymSpinor rotate_lower_unprimed(const SymSpinor& a, const std::array<std::array<cplx, 2>, 2>& L);
SymSpinor rotate_lower_primed(const SymSpinor& a, const std::array<std::array<cplx, 2>, 2>& L);
SymSpinor rotate_upper_unprimed(const SymSpinor& a, const std::array<std::array<cplx, 2>, 2>& L);
SymSpinor rotate_upper_primed(const SymSpinor& a, const std::array<std::array<cplx, 2>, 2>& L);

// ---------------------------------------------------------------------------
// Soldering map.  x^{AA'} = (1/sqrt2) [[t+z, x+iy], [x-iy, t-z]] as the
// upper-index (1,1) grid, so eta(v,w) = eps_{AB} eps_{A'B'} v^{AA'} w^{BB'}
// and 2 det(v^{AA'}) = eta(v,v).
// ---------------------------------------------------------------------------

//! Upper-index (1,1) grid of a real 4-vector (contravariant components).
SymSpinor vector_spinor(const Vec4& v);
SymSpinor vector_spinor(const CVec4& v);

//! Inverse of vector_spinor; the grid must be Hermitian (a real vector).
Vec4 spinor_vector(const SymSpinor& g, double tol = 1e-10);
CVec4 spinor_cvector(const SymSpinor& g);

//! Lower-index (1,1) grid of a covector k_mu: value pairs with x^{AA'} so that
//! k_{AA'} x^{AA'} = k_mu x^mu.
SymSpinor covector_spinor(const Vec4& k);
Vec4 spinor_covector(const SymSpinor& g, double tol = 1e-10);

//! Coefficient of d_mu in the spinorial derivative component d_{AA'}:
//! d_{00'} = (d_t+d_z)/sqrt2, d_{01'} = (d_x-i d_y)/sqrt2,
//! d_{10'} = (d_x+i d_y)/sqrt2, d_{11'} = (d_t-d_z)/sqrt2.
cplx der_coef(int A, int Ap, int mu);

//! Hermitian-conjugate symmetrization Y + conjugate(Y) of a (n,n) grid.
SymSpinor hermitize(const SymSpinor& a);

//! Max-norm of the anti-Hermitian part, as an absolute number.
double hermiticity_defect(const SymSpinor& a);

} // namespace spincons
