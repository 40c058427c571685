#include "spincons/solutions.hpp"

#include <cmath>

#include <json.hpp>

namespace spincons {

namespace {

SymSpinor spinor_power_lower(const SymSpinor& a, int n) {
    // a^{(x) n} for a of valence (1,0): grid[i] = a0^{n-i} a1^i
    SymSpinor r(n, 0);
    for (int i = 0; i <= n; ++i) {
        cplx v(1);
        for (int t = 0; t < n - i; ++t) v *= a.at(0);
        for (int t = 0; t < i; ++t) v *= a.at(1);
        r.at(i) = v;
    }
    return r;
}

} // namespace

Vec4 mode_covector(const SymSpinor& alpha) {
    if (alpha.p() != 1 || alpha.q() != 0) throw std::invalid_argument("mode spinor must be (1,0)");
    SymSpinor klow(1, 1);
    SymSpinor ab = conjugate(alpha);
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) klow.at(A, Ap) = alpha.at(A) * ab.at(0, Ap);
    return spinor_covector(klow);
}

SolutionField plane_wave(int twos, const SymSpinor& alpha, cplx amp, int sign) {
    if (twos < 1) throw std::invalid_argument("plane_wave: twice-spin must be >= 1");
    if (alpha.max_norm() == 0.0) throw std::invalid_argument("plane_wave: zero mode spinor");
    SolutionField f;
    f.twos = twos;
    f.pef = PolyExpField(twos, 0);
    SymSpinor coeff = spinor_power_lower(alpha, twos) * amp;
    Vec4 k = mode_covector(alpha) * double(sign);
    f.pef.append({SpinorPoly::constant(coeff), k});
    f.pef.compress();
    f.modes.push_back({alpha, amp, sign});
    return f;
}

SolutionField superposition(int twos, const std::vector<Mode>& modes) {
    SolutionField f;
    f.twos = twos;
    f.pef = PolyExpField(twos, 0);
    for (const auto& m : modes) {
        if (m.amp == cplx(0)) continue;
        SolutionField one = plane_wave(twos, m.alpha, m.amp, m.sign);
        f.pef += one.pef;
        f.modes.push_back(m);
    }
    return f;
}

SolutionField paper_wave(int twos, cplx f, double omega, int sign) {
    if (twos % 2 != 0)
        throw std::invalid_argument("paper_wave: the E+iB form is stated for integer spin");
    if (twos < 2 || omega <= 0) throw std::invalid_argument("paper_wave: need integer s >= 1, w > 0");
    const int s = twos / 2;
    // phi = 2^{s/2} conj(f) iota^{(x)2s} exp(-i sign w (t-z)); this makes the
    // electric/magnetic split come out as f * nhat^{(s)} exp(i sign w (t-z)).
    SymSpinor alpha = iota_spinor() * std::sqrt(std::sqrt(2.0) * omega);
    cplx amp = std::conj(f) / std::pow(omega, s);
    if (f == cplx(0)) {
        SolutionField z;
        z.twos = twos;
        z.pef = PolyExpField(twos, 0);
        return z;
    }
    return plane_wave(twos, alpha, amp, -sign);
}

AdjointField adjoint_wave(int twos, const SymSpinor& alpha, cplx amp, int sign) {
    if (twos < 1) throw std::invalid_argument("adjoint_wave: twice-spin must be >= 1");
    if (alpha.max_norm() == 0.0) throw std::invalid_argument("adjoint_wave: zero mode spinor");
    AdjointField w;
    w.twos = twos;
    SymSpinor abar_up = raise_all(conjugate(alpha));  // (0,1) upper
    SymSpinor coeff(1, twos - 1);
    for (int A = 0; A < 2; ++A)
        for (int j = 0; j <= twos - 1; ++j) {
            cplx v = amp * alpha.at(A);
            for (int t = 0; t < twos - 1 - j; ++t) v *= abar_up.at(0, 0);
            for (int t = 0; t < j; ++t) v *= abar_up.at(0, 1);
            coeff.at(A, j) = v;
        }
    w.pef = PolyExpField(1, twos - 1);
    w.pef.append({SpinorPoly::constant(coeff), mode_covector(alpha) * double(sign)});
    w.pef.compress();
    return w;
}

SolutionField duality(const SolutionField& f) {
    SolutionField r = f;
    r.pef = f.pef * cplx(0, -1);
    for (auto& m : r.modes) m.amp *= cplx(0, -1);
    return r;
}

PolyExpField conjugate_field(const SolutionField& f) { return f.pef.conj(); }

Jet jet_at(const SolutionField& f, const Point4& x, int order) {
    if (order < 0) throw std::invalid_argument("jet_at: negative order");
    Jet jet;
    jet.twos = f.twos;
    jet.value = f.pef.eval(x);
    jet.derivs.push_back(jet.value);
    PolyExpField cur = f.pef;
    for (int p = 1; p <= order; ++p) {
        std::array<std::array<PolyExpField, 2>, 2> G;
        for (int A = 0; A < 2; ++A)
            for (int Ap = 0; Ap < 2; ++Ap) G[A][Ap] = cur.deriv_AA(A, Ap);
        if (p == 1)
            for (int A = 0; A < 2; ++A)
                for (int Ap = 0; Ap < 2; ++Ap) jet.raw1[A][Ap] = G[A][Ap].eval(x);
        cur = sym_append_derivative(G);
        jet.derivs.push_back(cur.eval(x));
    }
    if (order == 0)
        for (int A = 0; A < 2; ++A)
            for (int Ap = 0; Ap < 2; ++Ap) jet.raw1[A][Ap] = f.pef.deriv_AA(A, Ap).eval(x);
    return jet;
}

double field_scale(const SolutionField& f, const Point4& x) {
    double s = f.pef.eval(x).max_norm();
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) s = std::max(s, f.pef.deriv_AA(A, Ap).eval(x).max_norm());
    return s;
}

double field_scale(const AdjointField& f, const Point4& x) {
    double s = f.pef.eval(x).max_norm();
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) s = std::max(s, f.pef.deriv_AA(A, Ap).eval(x).max_norm());
    return s;
}

double equation_residual(const SolutionField& f, const Point4& x) {
    // d^{A1}_{~A'} phi_{A1..} = eps^{A1 B} d_{B A'} phi_{A1 ..}:
    // residual_{A'}[j] = (d_{1A'} phi)[j] - (d_{0A'} phi)[j+1]
    double scale = field_scale(f, x);
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    for (int Ap = 0; Ap < 2; ++Ap) {
        SymSpinor d0 = f.pef.deriv_AA(0, Ap).eval(x);
        SymSpinor d1 = f.pef.deriv_AA(1, Ap).eval(x);
        for (int j = 0; j <= f.twos - 1; ++j)
            worst = std::max(worst, std::abs(d1.at(j) - d0.at(j + 1)));
    }
    return worst / scale;
}

double adjoint_residual(const AdjointField& f, const Point4& x) {
    // d^{A(A'1} omega^{A'2..A'2s)}_{~A} with omega's primed indices stored up:
    // T_a = sum_A (-1)^{A+a} d_{(1-A)(1-a)} omega |_{unprimed slot A}, then the
    // free primed index a is symmetrized into the group.
    double scale = field_scale(f, x);
    if (scale == 0.0) return 0.0;
    std::array<SymSpinor, 2> T;
    for (int a = 0; a < 2; ++a) {
        SymSpinor acc(0, f.twos - 1);
        for (int A = 0; A < 2; ++A) {
            double sgn = ((A + a) % 2 == 0) ? 1.0 : -1.0;
            SymSpinor d = f.pef.deriv_AA(1 - A, 1 - a).eval(x);
            acc += fix_unprimed(d, A) * sgn;
        }
        T[a] = acc;
    }
    SymSpinor res = merge_primed(T[0], T[1]);
    return res.max_norm() / scale;
}

PolyExpField slie_raw(const PolyExpField& f, const KillingSpinor& zeta, bool primed_field) {
    CkvDecomp dec = ckv_decompose(zeta);
    PolyExpField out(f.p(), f.q());
    for (int B = 0; B < 2; ++B)
        for (int Bp = 0; Bp < 2; ++Bp) {
            SpinorPoly comp = poly_component(zeta.poly, B, Bp);
            if (comp.empty()) continue;
            out += scalar_poly_times(comp, f.deriv_AA(B, Bp));
        }
    if (primed_field)
        out += rotate_field_lower_primed(f, dec.lambda_bar);
    else
        out += rotate_field_lower_unprimed(f, dec.lambda);
    // conformal weight (s+1)/4 * div zeta; see the module tests for the
    // calibration of this coefficient against solution preservation.
    int twos = primed_field ? f.q() : f.p();
    double w = double(twos + 2) / 8.0;
    out += scalar_poly_times(dec.theta * w, f);
    out.compress();
    return out;
}

SolutionField slie(const SolutionField& f, const KillingSpinor& zeta) {
    if (zeta.k != 1 || zeta.l != 1) throw std::invalid_argument("slie: zeta not type (1,1)");
    Point4 probe{0.37, -0.81, 0.59, 0.13};
    if (killing_residual(zeta, probe) > 1e-8)
        throw std::domain_error("slie: zeta is not a conformal Killing vector");
    SolutionField r;
    r.twos = f.twos;
    r.pef = slie_raw(f.pef, zeta, false);
    return r;
}

SolutionField slie_pow(const SolutionField& f, const KillingSpinor& zeta, int n) {
    SolutionField r = f;
    for (int i = 0; i < n; ++i) r = slie(r, zeta);
    return r;
}

std::string family_to_json(const SolutionField& f) {
    if (f.modes.empty() && !f.pef.empty())
        throw std::domain_error("family_to_json: field is not a plane-wave superposition");
    nlohmann::json j;
    j["format"] = "spincons-family";
    j["version"] = 1;
    j["modes"] = nlohmann::json::array();
    for (const auto& m : f.modes) {
        nlohmann::json jm;
        jm["twice_spin"] = f.twos;
        jm["alpha"] = {{m.alpha.at(0).real(), m.alpha.at(0).imag()},
                       {m.alpha.at(1).real(), m.alpha.at(1).imag()}};
        jm["amp"] = {m.amp.real(), m.amp.imag()};
        jm["sign"] = m.sign;
        j["modes"].push_back(jm);
    }
    return j.dump(2);
}

SolutionField family_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (j.value("format", "") != std::string("spincons-family"))
        throw std::invalid_argument("family_from_json: wrong format tag");
    if (j.value("version", 0) != 1)
        throw std::invalid_argument("family_from_json: unsupported version");
    std::vector<Mode> modes;
    int twos = 0;
    for (const auto& jm : j.at("modes")) {
        Mode m;
        twos = jm.at("twice_spin").get<int>();
        m.alpha = SymSpinor(1, 0);
        m.alpha.at(0) = cplx(jm.at("alpha")[0][0].get<double>(), jm.at("alpha")[0][1].get<double>());
        m.alpha.at(1) = cplx(jm.at("alpha")[1][0].get<double>(), jm.at("alpha")[1][1].get<double>());
        m.amp = cplx(jm.at("amp")[0].get<double>(), jm.at("amp")[1].get<double>());
        m.sign = jm.at("sign").get<int>();
        modes.push_back(m);
    }
    if (twos == 0) throw std::invalid_argument("family_from_json: empty family");
    return superposition(twos, modes);
}

} // namespace spincons
