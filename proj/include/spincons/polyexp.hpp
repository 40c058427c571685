#pragma once

#include <vector>

#include "spincons/poly.hpp"

namespace spincons {

//! Finite sum of polynomial-times-plane-exponential terms,
//!     F(x) = sum_r  P_r(x) * exp(i k_r . x),
//! with SymSpinor(p,q)-valued polynomials P_r and real covectors k_r (the
//! frequency sign is folded into k).  The class is closed under coordinate
//! and spinorial derivatives, products with contractions, and conjugation,
//! so every identity in the toolkit can be evaluated in exact closed form.
class PolyExpField {
  public:
    struct Term {
        SpinorPoly poly;
        Vec4 k;
    };

    PolyExpField() : p_(0), q_(0) {}
    PolyExpField(int p, int q) : p_(p), q_(q) {}

    static PolyExpField mode(const SpinorPoly& poly, const Vec4& k);

    int p() const { return p_; }
    int q() const { return q_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int max_poly_degree() const;
    double max_wavenumber() const;

    SymSpinor eval(const Point4& x) const;
    cplx eval_scalar(const Point4& x) const;

    PolyExpField deriv(int mu) const;
    //! Spinorial derivative component d_{AA'} (both indices lower).
    PolyExpField deriv_AA(int A, int Ap) const;

    PolyExpField conj() const;

    PolyExpField operator+(const PolyExpField& o) const;
    PolyExpField operator-(const PolyExpField& o) const;
    PolyExpField operator*(cplx s) const;
    PolyExpField& operator+=(const PolyExpField& o);

    //! Merge equal-k terms and drop exact-zero polynomials.
    void compress();

    double max_coeff_norm() const;

    void append(const Term& t);

  private:
    int p_, q_;
    std::vector<Term> terms_;
};

//! Contraction of two fields: polynomial products term-by-term, wave
//! covectors add.
PolyExpField combine(const PolyExpField& a, const PolyExpField& b, int m, int n,
                     const Kernel& KU, const Kernel& KP);

//! Contraction of a pure polynomial (Killing data) against a field.
PolyExpField combine_poly_field(const SpinorPoly& a, const PolyExpField& b, int m, int n,
                                const Kernel& KU, const Kernel& KP);

PolyExpField rotate_field_lower_unprimed(const PolyExpField& f, const SpinorPoly& lambda);
PolyExpField rotate_field_lower_primed(const PolyExpField& f, const SpinorPoly& lambda_bar);

//! Scalar-poly times field.
PolyExpField scalar_poly_times(const SpinorPoly& s, const PolyExpField& f);

//! Symmetrize a derivative pair onto a field: given the four components
//! G[A][Ap] of d_{AA'}F with F of valence (p,q), return the (p+1,q+1) field
//! obtained by symmetrizing the new indices into each group.
PolyExpField sym_append_derivative(const std::array<std::array<PolyExpField, 2>, 2>& G);

//! One grid entry as a scalar field.
PolyExpField pef_component(const PolyExpField& f, int i, int j);

//! Fix one primed index to the value v (coefficient-wise).
PolyExpField pef_fix_primed(const PolyExpField& f, int v);

//! Build a (1,q) field from its unprimed-index components (no symmetrization;
//! the unprimed index is a singleton group).
PolyExpField pef_stack_unprimed(const PolyExpField& g0, const PolyExpField& g1);

//! X + conj(X) for a (n,n) field; Hermitian values.
PolyExpField herm_field(const PolyExpField& f);

//! Fix one unprimed index to the value v (coefficient-wise).
PolyExpField pef_fix_unprimed(const PolyExpField& f, int v);

//! Symmetrize one extra index onto the component fields g0, g1.
PolyExpField merge_unprimed_fields(const PolyExpField& g0, const PolyExpField& g1);
PolyExpField merge_primed_fields(const PolyExpField& g0, const PolyExpField& g1);

} // namespace spincons
