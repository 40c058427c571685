#include "spincons/polyexp.hpp"

#include <cmath>

namespace spincons {

PolyExpField PolyExpField::mode(const SpinorPoly& poly, const Vec4& k) {
    PolyExpField f(poly.p(), poly.q());
    f.terms_.push_back({poly, k});
    return f;
}

int PolyExpField::max_poly_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.poly.degree());
    return d;
}

double PolyExpField::max_wavenumber() const {
    double m = 0.0;
    for (const auto& t : terms_)
        m = std::max(m, std::sqrt(t.k.t * t.k.t + t.k.x * t.k.x + t.k.y * t.k.y + t.k.z * t.k.z));
    return m;
}

SymSpinor PolyExpField::eval(const Point4& x) const {
    SymSpinor r(p_, q_);
    for (const auto& t : terms_) {
        double phase = t.k.t * x.t + t.k.x * x.x + t.k.y * x.y + t.k.z * x.z;
        r += t.poly.eval(x) * std::exp(cplx(0, phase));
    }
    return r;
}

cplx PolyExpField::eval_scalar(const Point4& x) const {
    if (p_ != 0 || q_ != 0) throw std::invalid_argument("eval_scalar on non-scalar field");
    return eval(x).at(0, 0);
}

PolyExpField PolyExpField::deriv(int mu) const {
    PolyExpField r(p_, q_);
    for (const auto& t : terms_) {
        SpinorPoly dp = t.poly.deriv(mu) + t.poly * cplx(0, t.k[mu]);
        dp.prune();
        if (!dp.empty()) r.terms_.push_back({dp, t.k});
    }
    return r;
}

PolyExpField PolyExpField::deriv_AA(int A, int Ap) const {
    PolyExpField r(p_, q_);
    for (int mu = 0; mu < 4; ++mu) {
        cplx c = der_coef(A, Ap, mu);
        if (c == cplx(0)) continue;
        r += deriv(mu) * c;
    }
    r.compress();
    return r;
}

PolyExpField PolyExpField::conj() const {
    PolyExpField r(q_, p_);
    for (const auto& t : terms_) r.terms_.push_back({t.poly.conj(), t.k * (-1.0)});
    return r;
}

PolyExpField PolyExpField::operator+(const PolyExpField& o) const {
    PolyExpField r = *this;
    r += o;
    return r;
}

PolyExpField PolyExpField::operator-(const PolyExpField& o) const {
    return *this + o * cplx(-1);
}

PolyExpField PolyExpField::operator*(cplx s) const {
    PolyExpField r(p_, q_);
    for (const auto& t : terms_) r.terms_.push_back({t.poly * s, t.k});
    return r;
}

PolyExpField& PolyExpField::operator+=(const PolyExpField& o) {
    if (terms_.empty() && p_ == 0 && q_ == 0) {
        p_ = o.p_;
        q_ = o.q_;
    }
    if (o.p_ != p_ || o.q_ != q_) throw std::invalid_argument("field += valence mismatch");
    for (const auto& t : o.terms_) terms_.push_back(t);
    compress();
    return *this;
}

void PolyExpField::append(const Term& t) {
    if (t.poly.p() != p_ || t.poly.q() != q_)
        throw std::invalid_argument("append: term valence mismatch");
    terms_.push_back(t);
}

void PolyExpField::compress() {
    std::vector<Term> merged;
    for (auto& t : terms_) {
        t.poly.prune();
        if (t.poly.empty()) continue;
        bool found = false;
        for (auto& m : merged)
            if (m.k == t.k) {
                m.poly += t.poly;
                found = true;
                break;
            }
        if (!found) merged.push_back(t);
    }
    for (auto it = merged.begin(); it != merged.end();) {
        it->poly.prune();
        it = it->poly.empty() ? merged.erase(it) : std::next(it);
    }
    terms_ = std::move(merged);
}

double PolyExpField::max_coeff_norm() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, t.poly.max_coeff_norm());
    return m;
}

PolyExpField combine(const PolyExpField& a, const PolyExpField& b, int m, int n,
                     const Kernel& KU, const Kernel& KP) {
    PolyExpField r(a.p() + b.p() - 2 * m, a.q() + b.q() - 2 * n);
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            SpinorPoly pp = combine_poly(ta.poly, tb.poly, m, n, KU, KP);
            if (!pp.empty()) r.append({pp, ta.k + tb.k});
        }
    r.compress();
    return r;
}

PolyExpField combine_poly_field(const SpinorPoly& a, const PolyExpField& b, int m, int n,
                                const Kernel& KU, const Kernel& KP) {
    PolyExpField r(a.p() + b.p() - 2 * m, a.q() + b.q() - 2 * n);
    for (const auto& tb : b.terms()) {
        SpinorPoly pp = combine_poly(a, tb.poly, m, n, KU, KP);
        if (!pp.empty()) r.append({pp, tb.k});
    }
    r.compress();
    return r;
}

PolyExpField rotate_field_lower_unprimed(const PolyExpField& f, const SpinorPoly& lambda) {
    PolyExpField r(f.p(), f.q());
    for (const auto& t : f.terms()) {
        SpinorPoly pp = rotate_poly_lower_unprimed(t.poly, lambda);
        if (!pp.empty()) r.append({pp, t.k});
    }
    r.compress();
    return r;
}

PolyExpField rotate_field_lower_primed(const PolyExpField& f, const SpinorPoly& lambda_bar) {
    PolyExpField r(f.p(), f.q());
    for (const auto& t : f.terms()) {
        SpinorPoly pp = rotate_poly_lower_primed(t.poly, lambda_bar);
        if (!pp.empty()) r.append({pp, t.k});
    }
    r.compress();
    return r;
}

PolyExpField scalar_poly_times(const SpinorPoly& s, const PolyExpField& f) {
    return combine_poly_field(s, f, 0, 0, kEps, kEps);
}

PolyExpField merge_primed_fields(const PolyExpField& g0, const PolyExpField& g1) {
    PolyExpField out(g0.p(), g0.q() + 1);
    for (const auto& t : g0.terms()) {
        SpinorPoly p(out.p(), out.q());
        for (const auto& [k, c] : t.poly.terms())
            p.add_term(MultiDeg::from_key(k), merge_primed(c, SymSpinor(c.p(), c.q())));
        out.append({p, t.k});
    }
    for (const auto& t : g1.terms()) {
        SpinorPoly p(out.p(), out.q());
        for (const auto& [k, c] : t.poly.terms())
            p.add_term(MultiDeg::from_key(k), merge_primed(SymSpinor(c.p(), c.q()), c));
        out.append({p, t.k});
    }
    out.compress();
    return out;
}

PolyExpField merge_unprimed_fields(const PolyExpField& g0, const PolyExpField& g1) {
    PolyExpField out(g0.p() + 1, g0.q());
    for (const auto& t : g0.terms()) {
        SpinorPoly p(out.p(), out.q());
        for (const auto& [k, c] : t.poly.terms())
            p.add_term(MultiDeg::from_key(k), merge_unprimed(c, SymSpinor(c.p(), c.q())));
        out.append({p, t.k});
    }
    for (const auto& t : g1.terms()) {
        SpinorPoly p(out.p(), out.q());
        for (const auto& [k, c] : t.poly.terms())
            p.add_term(MultiDeg::from_key(k), merge_unprimed(SymSpinor(c.p(), c.q()), c));
        out.append({p, t.k});
    }
    out.compress();
    return out;
}

PolyExpField pef_fix_unprimed(const PolyExpField& f, int v) {
    PolyExpField r(f.p() - 1, f.q());
    for (const auto& t : f.terms()) {
        SpinorPoly p(f.p() - 1, f.q());
        for (const auto& [k, c] : t.poly.terms())
            p.add_term(MultiDeg::from_key(k), fix_unprimed(c, v));
        p.prune();
        if (!p.empty()) r.append({p, t.k});
    }
    r.compress();
    return r;
}

PolyExpField sym_append_derivative(const std::array<std::array<PolyExpField, 2>, 2>& G) {
    // merge the primed pair first (per fixed unprimed value), then the
    // unprimed pair; merges lift term-by-term since they are linear.
    PolyExpField k0 = merge_primed_fields(G[0][0], G[0][1]);
    PolyExpField k1 = merge_primed_fields(G[1][0], G[1][1]);
    return merge_unprimed_fields(k0, k1);
}

} // namespace spincons

namespace spincons {

PolyExpField pef_component(const PolyExpField& f, int i, int j) {
    PolyExpField r(0, 0);
    for (const auto& t : f.terms()) {
        SpinorPoly p = poly_component(t.poly, i, j);
        if (!p.empty()) r.append({p, t.k});
    }
    r.compress();
    return r;
}

PolyExpField pef_fix_primed(const PolyExpField& f, int v) {
    PolyExpField r(f.p(), f.q() - 1);
    for (const auto& t : f.terms()) {
        SpinorPoly p(f.p(), f.q() - 1);
        for (const auto& [k, c] : t.poly.terms()) p.add_term(MultiDeg::from_key(k), fix_primed(c, v));
        p.prune();
        if (!p.empty()) r.append({p, t.k});
    }
    r.compress();
    return r;
}

PolyExpField pef_stack_unprimed(const PolyExpField& g0, const PolyExpField& g1) {
    if (g0.p() != 0 || g1.p() != 0 || g0.q() != g1.q())
        throw std::invalid_argument("pef_stack_unprimed: need two (0,q) fields");
    const int q = g0.q();
    PolyExpField r(1, q);
    auto lift = [&](const PolyExpField& g, int slot) {
        for (const auto& t : g.terms()) {
            SpinorPoly p(1, q);
            for (const auto& [k, c] : t.poly.terms()) {
                SymSpinor s(1, q);
                for (int j = 0; j <= q; ++j) s.at(slot, j) = c.at(0, j);
                p.add_term(MultiDeg::from_key(k), s);
            }
            r.append({p, t.k});
        }
    };
    lift(g0, 0);
    lift(g1, 1);
    r.compress();
    return r;
}

PolyExpField herm_field(const PolyExpField& f) {
    if (f.p() != f.q()) throw std::invalid_argument("herm_field: valence not (n,n)");
    return f + f.conj();
}

} // namespace spincons
