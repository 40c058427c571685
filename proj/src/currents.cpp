#include "spincons/currents.hpp"

#include <cmath>

namespace spincons {

namespace {

void require_real_ckv(const KillingSpinor& zeta) {
    if (zeta.k != 1 || zeta.l != 1) throw std::invalid_argument("zeta must be type (1,1)");
    Point4 probe{0.29, -0.61, 0.47, 0.83};
    if (killing_residual(zeta, probe) > 1e-8)
        throw std::domain_error("zeta is not a conformal Killing vector");
    SymSpinor v = zeta.eval(probe);
    if (hermiticity_defect(v) > 1e-8 * std::max(1.0, v.max_norm()))
        throw std::domain_error("zeta is not real");
}

void require_cky(const KillingSpinor& Y) {
    if (Y.k != 0 || Y.l != 2) throw std::invalid_argument("Y must be type (0,2)");
    Point4 probe{0.41, 0.7, -0.23, 0.57};
    if (killing_residual(Y, probe) > 1e-8)
        throw std::domain_error("Y is not a conformal Killing-Yano tensor");
}

// Psi term  g_{A' A'_1..A'_{2s-1}} P^{A'_1..}_{~A}  for a (0,2s) field g.
PolyExpField assemble(const PolyExpField& P, const PolyExpField& g) {
    return combine(P, g, 0, P.q(), kDelta, kDelta);
}

// conj(phi)^{(n)} as a (0,2s) field; slie commutes with conjugation for the
// real zeta used in the quadratic currents.
PolyExpField conj_lie_pow(const SolutionField& f, const KillingSpinor& zeta, int n) {
    PolyExpField chi = conjugate_field(f);
    for (int i = 0; i < n; ++i) chi = slie_raw(chi, zeta, true);
    return chi;
}

KillingSpinor zeta_power(const KillingSpinor& zeta, int count) {
    if (count == 0) return unit_scalar_killing();
    std::vector<KillingSpinor> factors(count, zeta);
    return ks_product(std::span<const KillingSpinor>(factors));
}

} // namespace

KillingSpinor unit_scalar_killing() {
    KillingSpinor one;
    one.k = 0;
    one.l = 0;
    SymSpinor s(0, 0);
    s.at(0, 0) = 1.0;
    one.poly = SpinorPoly::constant(s);
    one.is_real = true;
    one.label = "1";
    return one;
}

Vec4 CurrentEval::eval(const Point4& x) const {
    return spinor_vector(raise_all(psi.eval(x)), 1e-8);
}

double CurrentEval::reality_defect(const Point4& x) const {
    return hermiticity_defect(psi.eval(x));
}

cplx CurrentEval::t_density(const Point4& x) const {
    SymSpinor up = raise_all(psi.eval(x));
    return kInvSqrt2 * (up.at(0, 0) + up.at(1, 1));
}

double CurrentEval::scale(const Point4& x) const {
    return psi.eval(x).max_norm();
}

CurrentEval elementary_current(const AdjointField& omega, const SolutionField& f) {
    if (omega.twos != f.twos) throw std::invalid_argument("elementary_current: spin mismatch");
    CurrentEval c;
    c.kind = CurrentKind::W;
    c.twos = f.twos;
    c.order = 0;
    c.psi = herm_field(assemble(omega.pef, conjugate_field(f)));
    return c;
}

AdjointSymmetryEval adjoint_symmetry_W(const AdjointField& omega) {
    AdjointSymmetryEval P;
    P.kind = AdjKind::W;
    P.twos = omega.twos;
    P.order = 0;
    P.P = omega.pef;
    return P;
}

AdjointSymmetryEval adjoint_symmetry_U(const SolutionField& f, int n, const KillingSpinor& zeta,
                                       const KillingSpinor& xi) {
    if (xi.k != f.twos - 1 || xi.l != f.twos - 1)
        throw std::invalid_argument("adjoint_symmetry_U: xi must be type (2s-1, 2s-1)");
    if (n < 0) throw std::invalid_argument("adjoint_symmetry_U: negative order");
    SolutionField fn = slie_pow(f, zeta, n);
    AdjointSymmetryEval P;
    P.kind = AdjKind::U;
    P.twos = f.twos;
    P.order = n;
    P.P = combine_poly_field(xi.poly, fn.pef, f.twos - 1, 0, kDelta, kDelta);
    return P;
}

AdjointSymmetryEval adjoint_symmetry_V(const SolutionField& f, int n, const KillingSpinor& zeta,
                                       const KillingSpinor& upsilon) {
    const int twos = f.twos;
    if (upsilon.k != 0 || upsilon.l != 2 * twos)
        throw std::invalid_argument("adjoint_symmetry_V: Upsilon must be type (0,4s)");
    if (n < 0) throw std::invalid_argument("adjoint_symmetry_V: negative order");

    PolyExpField chi = conj_lie_pow(f, zeta, n);
    const double grad_coef = double(twos + 1) / double(2 * twos + 1); // (2s+1)/(4s+1)

    std::array<PolyExpField, 2> comp{PolyExpField(0, twos - 1), PolyExpField(0, twos - 1)};
    for (int A = 0; A < 2; ++A) {
        PolyExpField acc(0, twos - 1);
        for (int ap = 0; ap < 2; ++ap) {
            // Upsilon^{A'..} D_{AA'} chi_{..}
            PolyExpField c1 =
                combine_poly_field(upsilon.poly, chi.deriv_AA(A, ap), 0, twos, kDelta, kDelta);
            acc += pef_fix_primed(c1, ap);
            // (d_{AA'} Upsilon^{A'..}) chi_{..}
            SpinorPoly dU = poly_deriv_AA(upsilon.poly, A, ap);
            if (!dU.empty()) {
                PolyExpField c2 = combine_poly_field(dU, chi, 0, twos, kDelta, kDelta);
                acc += pef_fix_primed(c2, ap) * grad_coef;
            }
        }
        comp[A] = acc;
    }

    AdjointSymmetryEval P;
    P.kind = AdjKind::V;
    P.twos = twos;
    P.order = n + 1;
    P.P = pef_stack_unprimed(comp[0], comp[1]);
    return P;
}

double adjoint_symmetry_residual(const AdjointSymmetryEval& P, const Point4& x) {
    // d^{A(A'_1} P^{A'_2..)}_{~A}, the adjoint symmetry equations
    double scale = P.P.eval(x).max_norm();
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap)
            scale = std::max(scale, P.P.deriv_AA(A, Ap).eval(x).max_norm());
    if (scale == 0.0) return 0.0;
    std::array<SymSpinor, 2> T;
    for (int a = 0; a < 2; ++a) {
        SymSpinor acc(0, P.twos - 1);
        for (int A = 0; A < 2; ++A) {
            double sgn = ((A + a) % 2 == 0) ? 1.0 : -1.0;
            SymSpinor d = P.P.deriv_AA(1 - A, 1 - a).eval(x);
            acc += fix_unprimed(d, A) * sgn;
        }
        T[a] = acc;
    }
    return merge_primed(T[0], T[1]).max_norm() / scale;
}

CurrentEval stress_energy(const SolutionField& f, const KillingSpinor& zeta, int n) {
    require_real_ckv(zeta);
    SolutionField fn = slie_pow(f, zeta, n);
    AdjointSymmetryEval U = adjoint_symmetry_U(fn, 0, zeta, zeta_power(zeta, f.twos - 1));
    CurrentEval c;
    c.kind = CurrentKind::T;
    c.twos = f.twos;
    c.order = n;
    c.psi = herm_field(assemble(U.P, conj_lie_pow(f, zeta, n)));
    return c;
}

CurrentEval zilch_current(const SolutionField& f, const KillingSpinor& zeta, int n) {
    require_real_ckv(zeta);
    SolutionField fn = slie_pow(f, zeta, n);
    AdjointSymmetryEval U =
        adjoint_symmetry_U(slie(fn, zeta), 0, zeta, zeta_power(zeta, f.twos - 1));
    CurrentEval c;
    c.kind = CurrentKind::Z;
    c.twos = f.twos;
    c.order = n + 1;
    c.psi = herm_field(assemble(U.P, conj_lie_pow(f, zeta, n)) * cplx(0, 1));
    return c;
}

CurrentEval chiral_current(const SolutionField& f, const KillingSpinor& Y,
                           const KillingSpinor& zeta, int n) {
    require_real_ckv(zeta);
    require_cky(Y);
    std::vector<KillingSpinor> factors(f.twos, Y);
    KillingSpinor upsilon = ks_product(std::span<const KillingSpinor>(factors));

    AdjointSymmetryEval V = adjoint_symmetry_V(f, n, zeta, upsilon);
    PolyExpField slie_chi = slie_raw(conj_lie_pow(f, zeta, n), zeta, true);
    CurrentEval c;
    c.kind = CurrentKind::V;
    c.twos = f.twos;
    c.order = n + 1;
    c.psi = herm_field(assemble(V.P, slie_chi));
    return c;
}

CurrentEval current_from_adjoint(const AdjointSymmetryEval& P, const SolutionField& f) {
    if (P.twos != f.twos) throw std::invalid_argument("current_from_adjoint: spin mismatch");
    double factor = (P.kind == AdjKind::W) ? 1.0 : 0.5;
    CurrentEval c;
    c.kind = CurrentKind::FromAdjoint;
    c.twos = f.twos;
    c.order = P.order;
    c.psi = herm_field(assemble(P.P, conjugate_field(f)) * factor);
    return c;
}

CurrentEval trivial_current(const PolyExpField& theta, const PolyExpField& theta_tilde) {
    if (theta.p() != 0 || theta.q() != 2 || theta_tilde.p() != 2 || theta_tilde.q() != 0)
        throw std::invalid_argument("trivial_current: need (0,2) and (2,0) potentials");
    // Psi_{AA'} = eps^{B'C'} d_{AC'} Theta_{A'B'} + eps^{BC} d_{CA'} ThetaT_{AB};
    // each term is a curl, so the divergence vanishes identically.
    PolyExpField psi(1, 1);
    auto add = [&](int A, int Ap, const PolyExpField& part) {
        for (const auto& t : part.terms()) {
            SpinorPoly p(1, 1);
            for (const auto& [k, c] : t.poly.terms()) {
                SymSpinor g(1, 1);
                g.at(A, Ap) = c.at(0, 0);
                p.add_term(MultiDeg::from_key(k), g);
            }
            psi.append({p, t.k});
        }
    };
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) {
            PolyExpField acc(0, 0);
            for (int Bp = 0; Bp < 2; ++Bp) {
                int Cp = 1 - Bp;
                double sgn = (Bp == 0) ? 1.0 : -1.0;  // eps^{B'C'}
                PolyExpField d = theta.deriv_AA(A, Cp);
                acc += pef_component(d, 0, (Ap ? 1 : 0) + (Bp ? 1 : 0)) * sgn;
            }
            for (int B = 0; B < 2; ++B) {
                int C = 1 - B;
                double sgn = (B == 0) ? 1.0 : -1.0;  // eps^{BC}
                PolyExpField d = theta_tilde.deriv_AA(C, Ap);
                acc += pef_component(d, (A ? 1 : 0) + (B ? 1 : 0), 0) * sgn;
            }
            add(A, Ap, acc);
        }
    psi.compress();
    CurrentEval c;
    c.kind = CurrentKind::Trivial;
    c.twos = 0;
    c.order = 1;
    c.psi = psi;
    return c;
}

PolyExpField exact_divergence(const CurrentEval& c) {
    PolyExpField div(0, 0);
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) {
            double sgn = ((A + Ap) % 2 == 0) ? 1.0 : -1.0;
            div += pef_component(c.psi, A, Ap).deriv_AA(1 - A, 1 - Ap) * sgn;
        }
    div.compress();
    return div;
}

double exact_divergence_residual(const CurrentEval& c, const Point4& x) {
    double scale = c.scale(x) * std::max(1.0, c.psi.max_wavenumber());
    if (scale == 0.0) return 0.0;
    return std::abs(exact_divergence(c).eval_scalar(x)) / scale;
}

CurrentEval density_current_T(const SolutionField& f, int n, const KillingSpinor& zeta,
                              const KillingSpinor& xi) {
    AdjointSymmetryEval U = adjoint_symmetry_U(f, n, zeta, xi);
    CurrentEval c = current_from_adjoint(U, f);
    c.kind = CurrentKind::T;
    c.order = n;
    return c;
}

CurrentEval density_current_Z(const SolutionField& f, int n, const KillingSpinor& zeta,
                              const KillingSpinor& xi) {
    AdjointSymmetryEval U = adjoint_symmetry_U(f, n, zeta, xi);
    U.P = U.P * cplx(0, 1);
    CurrentEval c = current_from_adjoint(U, f);
    c.kind = CurrentKind::Z;
    c.order = n;
    return c;
}

CurrentEval density_current_V(const SolutionField& f, int n, const KillingSpinor& zeta,
                              const KillingSpinor& upsilon) {
    AdjointSymmetryEval V = adjoint_symmetry_V(f, n, zeta, upsilon);
    CurrentEval c = current_from_adjoint(V, f);
    c.kind = CurrentKind::V;
    c.order = n + 1;
    return c;
}

} // namespace spincons
