#pragma once

#include <cstdint>
#include <map>

#include "spincons/spinor.hpp"

namespace spincons {

//! Multidegree in the coordinates (t,x,y,z), packed for map keys.
struct MultiDeg {
    std::array<uint8_t, 4> e{0, 0, 0, 0};

    uint32_t key() const {
        return (uint32_t(e[0]) << 24) | (uint32_t(e[1]) << 16) | (uint32_t(e[2]) << 8) | e[3];
    }
    static MultiDeg from_key(uint32_t k) {
        return {{uint8_t(k >> 24), uint8_t(k >> 16), uint8_t(k >> 8), uint8_t(k)}};
    }
    int total() const { return e[0] + e[1] + e[2] + e[3]; }
    MultiDeg plus(const MultiDeg& o) const {
        return {{uint8_t(e[0] + o.e[0]), uint8_t(e[1] + o.e[1]), uint8_t(e[2] + o.e[2]),
                 uint8_t(e[3] + o.e[3])}};
    }
};

//! Polynomial in the spacetime coordinates with SymSpinor(p,q) coefficients,
//! stored sparsely by multidegree.
class SpinorPoly {
  public:
    SpinorPoly() : p_(0), q_(0) {}
    SpinorPoly(int p, int q) : p_(p), q_(q) {}

    static SpinorPoly constant(const SymSpinor& c);
    //! The scalar monomial x^mu (valence (0,0), degree 1).
    static SpinorPoly coord(int mu);

    int p() const { return p_; }
    int q() const { return q_; }
    bool empty() const { return terms_.empty(); }
    int degree() const;
    const std::map<uint32_t, SymSpinor>& terms() const { return terms_; }

    void add_term(const MultiDeg& d, const SymSpinor& c);

    SymSpinor eval(const Point4& x) const;
    cplx eval_scalar(const Point4& x) const;

    SpinorPoly deriv(int mu) const;

    //! Coefficient-wise complex conjugation (valence swaps to (q,p)).
    SpinorPoly conj() const;

    SpinorPoly operator+(const SpinorPoly& o) const;
    SpinorPoly operator-(const SpinorPoly& o) const;
    SpinorPoly operator*(cplx s) const;
    SpinorPoly& operator+=(const SpinorPoly& o);

    double max_coeff_norm() const;
    void prune(double tol = 0.0);

  private:
    int p_, q_;
    std::map<uint32_t, SymSpinor> terms_;
};

//! Term-by-term contraction of two spinor polynomials (polynomial product,
//! spinor contract_general on the coefficients).
SpinorPoly combine_poly(const SpinorPoly& a, const SpinorPoly& b, int m, int n,
                        const Kernel& KU, const Kernel& KP);

//! Spinorial derivative component d_{AA'} of a polynomial.
SpinorPoly poly_deriv_AA(const SpinorPoly& a, int A, int Ap);

//! Extract one grid entry as a scalar polynomial.
SpinorPoly poly_component(const SpinorPoly& a, int i, int j);

//! GL(2) rotation actions with polynomial generator matrices.  L is a (2,0)
//! stored-lower spinor poly lambda_{AB}; the mixed matrix lambda_A^{~B} is
//! formed internally.  Lbar versions take a (0,2) poly.
SpinorPoly rotate_poly_lower_unprimed(const SpinorPoly& a, const SpinorPoly& lambda);
SpinorPoly rotate_poly_lower_primed(const SpinorPoly& a, const SpinorPoly& lambda_bar);
SpinorPoly rotate_poly_upper_unprimed(const SpinorPoly& a, const SpinorPoly& lambda);
SpinorPoly rotate_poly_upper_primed(const SpinorPoly& a, const SpinorPoly& lambda_bar);

//! Mixed matrices lambda_A^{~B} = eps^{BC} lambda_{AC} from a constant grid.
std::array<std::array<cplx, 2>, 2> mixed_from_lower_unprimed(const SymSpinor& lambda);
std::array<std::array<cplx, 2>, 2> mixed_from_lower_primed(const SymSpinor& lambda_bar);

} // namespace spincons
