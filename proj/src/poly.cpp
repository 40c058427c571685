#include "spincons/poly.hpp"

#include <cmath>

namespace spincons {

SpinorPoly SpinorPoly::constant(const SymSpinor& c) {
    SpinorPoly r(c.p(), c.q());
    r.add_term(MultiDeg{}, c);
    return r;
}

SpinorPoly SpinorPoly::coord(int mu) {
    SpinorPoly r(0, 0);
    MultiDeg d;
    d.e[mu] = 1;
    SymSpinor one(0, 0);
    one.at(0, 0) = 1.0;
    r.add_term(d, one);
    return r;
}

int SpinorPoly::degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, MultiDeg::from_key(k).total());
    return d;
}

void SpinorPoly::add_term(const MultiDeg& d, const SymSpinor& c) {
    if (c.p() != p_ || c.q() != q_) throw std::invalid_argument("add_term valence mismatch");
    auto [it, fresh] = terms_.try_emplace(d.key(), c);
    if (!fresh) it->second += c;
}

SymSpinor SpinorPoly::eval(const Point4& x) const {
    SymSpinor r(p_, q_);
    for (const auto& [k, c] : terms_) {
        MultiDeg d = MultiDeg::from_key(k);
        double mono = 1.0;
        for (int mu = 0; mu < 4; ++mu)
            for (int e = 0; e < d.e[mu]; ++e) mono *= x[mu];
        r += c * mono;
    }
    return r;
}

cplx SpinorPoly::eval_scalar(const Point4& x) const {
    if (p_ != 0 || q_ != 0) throw std::invalid_argument("eval_scalar on non-scalar poly");
    return eval(x).at(0, 0);
}

SpinorPoly SpinorPoly::deriv(int mu) const {
    SpinorPoly r(p_, q_);
    for (const auto& [k, c] : terms_) {
        MultiDeg d = MultiDeg::from_key(k);
        if (d.e[mu] == 0) continue;
        MultiDeg d2 = d;
        d2.e[mu] -= 1;
        r.add_term(d2, c * double(d.e[mu]));
    }
    return r;
}

SpinorPoly SpinorPoly::conj() const {
    SpinorPoly r(q_, p_);
    for (const auto& [k, c] : terms_) r.add_term(MultiDeg::from_key(k), conjugate(c));
    return r;
}

SpinorPoly SpinorPoly::operator+(const SpinorPoly& o) const {
    SpinorPoly r = *this;
    r += o;
    return r;
}

SpinorPoly SpinorPoly::operator-(const SpinorPoly& o) const {
    return *this + o * cplx(-1);
}

SpinorPoly SpinorPoly::operator*(cplx s) const {
    SpinorPoly r(p_, q_);
    for (const auto& [k, c] : terms_) {
        auto [it, fresh] = r.terms_.try_emplace(k, c * s);
        (void)it;
        (void)fresh;
    }
    return r;
}

SpinorPoly& SpinorPoly::operator+=(const SpinorPoly& o) {
    if (terms_.empty() && (p_ != o.p() || q_ != o.q()) && p_ == 0 && q_ == 0) {
        p_ = o.p();
        q_ = o.q();
    }
    if (o.p() != p_ || o.q() != q_) throw std::invalid_argument("poly += valence mismatch");
    for (const auto& [k, c] : o.terms_) add_term(MultiDeg::from_key(k), c);
    return *this;
}

double SpinorPoly::max_coeff_norm() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, c.max_norm());
    return m;
}

void SpinorPoly::prune(double tol) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second.max_norm() <= tol) ? terms_.erase(it) : std::next(it);
}

SpinorPoly combine_poly(const SpinorPoly& a, const SpinorPoly& b, int m, int n,
                        const Kernel& KU, const Kernel& KP) {
    SpinorPoly r(a.p() + b.p() - 2 * m, a.q() + b.q() - 2 * n);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term(MultiDeg::from_key(ka).plus(MultiDeg::from_key(kb)),
                       contract_general(ca, cb, m, n, KU, KP));
    r.prune();
    return r;
}

SpinorPoly poly_deriv_AA(const SpinorPoly& a, int A, int Ap) {
    SpinorPoly r(a.p(), a.q());
    for (int mu = 0; mu < 4; ++mu) {
        cplx c = der_coef(A, Ap, mu);
        if (c == cplx(0)) continue;
        r += a.deriv(mu) * c;
    }
    r.prune();
    return r;
}

SpinorPoly poly_component(const SpinorPoly& a, int i, int j) {
    SpinorPoly r(0, 0);
    for (const auto& [k, c] : a.terms()) {
        SymSpinor s(0, 0);
        s.at(0, 0) = c.at(i, j);
        r.add_term(MultiDeg::from_key(k), s);
    }
    r.prune();
    return r;
}

std::array<std::array<cplx, 2>, 2> mixed_from_lower_unprimed(const SymSpinor& lambda) {
    // lambda_{AB} symmetric stored-lower; L[A][B] = eps^{BC} lambda_{AC}:
    // L[A][0] = lambda_{A1}, L[A][1] = -lambda_{A0}
    return {{{lambda.at(1), -lambda.at(0)}, {lambda.at(2), -lambda.at(1)}}};
}

std::array<std::array<cplx, 2>, 2> mixed_from_lower_primed(const SymSpinor& lambda_bar) {
    return {{{lambda_bar.at(0, 1), -lambda_bar.at(0, 0)},
             {lambda_bar.at(0, 2), -lambda_bar.at(0, 1)}}};
}

namespace {

template <typename RotFn>
SpinorPoly rotate_poly_impl(const SpinorPoly& a, const SpinorPoly& gen, RotFn rot) {
    SpinorPoly r(a.p(), a.q());
    for (const auto& [kg, cg] : gen.terms())
        for (const auto& [ka, ca] : a.terms())
            r.add_term(MultiDeg::from_key(kg).plus(MultiDeg::from_key(ka)), rot(ca, cg));
    r.prune();
    return r;
}

} // namespace

SpinorPoly rotate_poly_lower_unprimed(const SpinorPoly& a, const SpinorPoly& lambda) {
    return rotate_poly_impl(a, lambda, [](const SymSpinor& ca, const SymSpinor& cg) {
        return rotate_lower_unprimed(ca, mixed_from_lower_unprimed(cg));
    });
}

SpinorPoly rotate_poly_lower_primed(const SpinorPoly& a, const SpinorPoly& lambda_bar) {
    return rotate_poly_impl(a, lambda_bar, [](const SymSpinor& ca, const SymSpinor& cg) {
        return rotate_lower_primed(ca, mixed_from_lower_primed(cg));
    });
}

SpinorPoly rotate_poly_upper_unprimed(const SpinorPoly& a, const SpinorPoly& lambda) {
    return rotate_poly_impl(a, lambda, [](const SymSpinor& ca, const SymSpinor& cg) {
        return rotate_upper_unprimed(ca, mixed_from_lower_unprimed(cg));
    });
}

SpinorPoly rotate_poly_upper_primed(const SpinorPoly& a, const SpinorPoly& lambda_bar) {
    return rotate_poly_impl(a, lambda_bar, [](const SymSpinor& ca, const SymSpinor& cg) {
        return rotate_upper_primed(ca, mixed_from_lower_primed(cg));
    });
}

} // namespace spincons
