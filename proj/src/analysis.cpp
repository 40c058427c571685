#include "spincons/analysis.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace spincons {

namespace {

constexpr double kTwoPi = 6.2831853071795864769;

// t_A^{~B'} and t^A_{~A'} mixed soldering matrices for the unit normal
const cplx kTAB[2][2] = {{0, -kInvSqrt2}, {kInvSqrt2, 0}};  // t_A^{~B'}
// sign fixed so that the EBFid reconstruction holds with the +2^ceil(s) factor
const cplx kTBA[2][2] = {{0, -kInvSqrt2}, {kInvSqrt2, 0}};  // t^A_{~A'}

// Contract t_A^{~B'} into one primed index, adding an unprimed one; the
// result is symmetric because all t factors coincide.
SymSpinor grid_tcontract(const SymSpinor& g) {
    const int p = g.p(), q = g.q();
    SymSpinor out(p + 1, q - 1);
    for (int i = 0; i <= p + 1; ++i)
        for (int j = 0; j <= q - 1; ++j) {
            cplx v(0);
            if (i <= p) {
                for (int b = 0; b < 2; ++b)
                    if (kTAB[0][b] != cplx(0)) v += kTAB[0][b] * g.at(i, j + b);
            } else {
                for (int b = 0; b < 2; ++b)
                    if (kTAB[1][b] != cplx(0)) v += kTAB[1][b] * g.at(i - 1, j + b);
            }
            out.at(i, j) = v;
        }
    return out;
}

SymSpinor grid_tcontract_inv(const SymSpinor& g) {
    const int p = g.p(), q = g.q();
    SymSpinor out(p - 1, q + 1);
    for (int i = 0; i <= p - 1; ++i)
        for (int j = 0; j <= q + 1; ++j) {
            cplx v(0);
            if (j <= q) {
                for (int a = 0; a < 2; ++a)
                    if (kTBA[a][0] != cplx(0)) v += kTBA[a][0] * g.at(i + a, j);
            } else {
                for (int a = 0; a < 2; ++a)
                    if (kTBA[a][1] != cplx(0)) v += kTBA[a][1] * g.at(i + a, j - 1);
            }
            out.at(i, j) = v;
        }
    return out;
}

PolyExpField pef_map_grids(const PolyExpField& f, int dp, int dq,
                           SymSpinor (*fn)(const SymSpinor&)) {
    PolyExpField r(f.p() + dp, f.q() + dq);
    for (const auto& t : f.terms()) {
        SpinorPoly p(f.p() + dp, f.q() + dq);
        for (const auto& [k, c] : t.poly.terms()) p.add_term(MultiDeg::from_key(k), fn(c));
        p.prune();
        if (!p.empty()) r.append({p, t.k});
    }
    r.compress();
    return r;
}

// spatial derivative d'_{AA'} = d_{AA'} - t_{AA'} d_t
PolyExpField spatial_deriv(const PolyExpField& f, int A, int Ap) {
    PolyExpField r = f.deriv_AA(A, Ap);
    if (A == Ap) r += f.deriv(0) * cplx(-kInvSqrt2);
    r.compress();
    return r;
}

// curl on a spatial symmetric field (valence (p,q) with p,q >= 1):
// i t^{BB'} ( d'_{A B'} F_{B..} - d'_{B A'} F_{..B'..} ), new indices
// symmetrized into their groups.
PolyExpField curl_field(const PolyExpField& F) {
    SymSpinor tup = vector_spinor(Vec4{1, 0, 0, 0});
    std::array<PolyExpField, 2> t1, t2;
    for (int A = 0; A < 2; ++A) {
        PolyExpField acc(F.p() - 1, F.q());
        for (int B = 0; B < 2; ++B)
            for (int Bp = 0; Bp < 2; ++Bp) {
                cplx w = tup.at(B, Bp);
                if (w == cplx(0)) continue;
                acc += spatial_deriv(pef_fix_unprimed(F, B), A, Bp) * w;
            }
        t1[A] = acc;
    }
    for (int Ap = 0; Ap < 2; ++Ap) {
        PolyExpField acc(F.p(), F.q() - 1);
        for (int B = 0; B < 2; ++B)
            for (int Bp = 0; Bp < 2; ++Bp) {
                cplx w = tup.at(B, Bp);
                if (w == cplx(0)) continue;
                acc += spatial_deriv(pef_fix_primed(F, Bp), B, Ap) * w;
            }
        t2[Ap] = acc;
    }
    PolyExpField m1 = merge_unprimed_fields(t1[0], t1[1]);
    PolyExpField m2 = merge_primed_fields(t2[0], t2[1]);
    // orientation fixed against the coordinate curl of a test vector
    return (m2 - m1) * cplx(0, 1);
}

PolyExpField div_field(const PolyExpField& F) {
    PolyExpField r(F.p() - 1, F.q() - 1);
    for (int A = 0; A < 2; ++A)
        for (int Ap = 0; Ap < 2; ++Ap) {
            double sgn = ((A + Ap) % 2 == 0) ? 1.0 : -1.0;
            PolyExpField d = spatial_deriv(F, 1 - A, 1 - Ap);
            r += pef_fix_unprimed(pef_fix_primed(d, Ap), A) * sgn;
        }
    r.compress();
    return r;
}

// (D+ x v)_A = 2i t^{BB'} d'_{AB'} v_B for a (1,0) field
PolyExpField dplus_curl(const PolyExpField& v) {
    SymSpinor tup = vector_spinor(Vec4{1, 0, 0, 0});
    std::array<PolyExpField, 2> comp;
    for (int A = 0; A < 2; ++A) {
        PolyExpField acc(0, 0);
        for (int B = 0; B < 2; ++B)
            for (int Bp = 0; Bp < 2; ++Bp) {
                cplx w = tup.at(B, Bp);
                if (w == cplx(0)) continue;
                acc += spatial_deriv(pef_fix_unprimed(v, B), A, Bp) * w;
            }
        // orientation matched to the coordinate curl convention above
        comp[A] = acc * cplx(0, -2);
    }
    // stack the single unprimed index
    PolyExpField out(1, 0);
    auto lift = [&](const PolyExpField& g, int slot) {
        for (const auto& t : g.terms()) {
            SpinorPoly p(1, 0);
            for (const auto& [k, c] : t.poly.terms()) {
                SymSpinor s(1, 0);
                s.at(slot, 0) = c.at(0, 0);
                p.add_term(MultiDeg::from_key(k), s);
            }
            out.append({p, t.k});
        }
    };
    lift(comp[0], 0);
    lift(comp[1], 1);
    out.compress();
    return out;
}

//! (E + iB) as a field: ceil(s) t-contractions of conj(phi).
PolyExpField eb_field(const SolutionField& f) {
    PolyExpField G = conjugate_field(f);
    const int napply = (f.twos + 1) / 2;
    for (int r = 0; r < napply; ++r) G = pef_map_grids(G, +1, -1, &grid_tcontract);
    return G;
}

CVec4 current_cvec(const CurrentEval& c, const Point4& x) {
    return spinor_cvector(raise_all(c.psi.eval(x)));
}

} // namespace

double divergence_residual(const CurrentEval& c, const Point4& x, double h) {
    if (h <= 0) throw std::invalid_argument("divergence_residual: step must be positive");
    auto div4 = [&](double step) {
        cplx acc(0);
        for (int mu = 0; mu < 4; ++mu) {
            Point4 xp = x, xm = x, xp2 = x, xm2 = x;
            xp[mu] += step;
            xm[mu] -= step;
            xp2[mu] += 2 * step;
            xm2[mu] -= 2 * step;
            cplx d = (8.0 * (current_cvec(c, xp)[mu] - current_cvec(c, xm)[mu]) -
                      (current_cvec(c, xp2)[mu] - current_cvec(c, xm2)[mu])) /
                     (12.0 * step);
            acc += d;
        }
        return acc;
    };
    cplx r = (16.0 * div4(h / 2) - div4(h)) / 15.0;
    double scale = c.scale(x) * std::max(1.0, c.psi.max_wavenumber());
    if (scale == 0.0) return 0.0;
    return std::abs(r) / scale;
}

int max_harmonic(const CurrentEval& c, double L, double tol) {
    int maxh = 0;
    for (const auto& t : c.psi.terms()) {
        for (int mu : {1, 2, 3}) {
            double h = t.k[mu] * L / kTwoPi;
            double hr = std::round(h);
            if (std::abs(h - hr) > tol * std::max(1.0, std::abs(h))) return -1;
            maxh = std::max(maxh, (int)std::llround(std::abs(hr)));
        }
    }
    return maxh;
}

double conserved_quantity(const CurrentEval& c, double t, int N, double L) {
    int mh = max_harmonic(c, L);
    if (mh < 0)
        throw std::domain_error("conserved_quantity: modes incommensurate with the box");
    if (N < 2 * mh + 1)
        throw std::invalid_argument("conserved_quantity: grid does not resolve the harmonics");
    const double dx = L / N, w = dx * dx * dx;
    double sum = 0.0;
    for (int ix = 0; ix < N; ++ix)
        for (int iy = 0; iy < N; ++iy)
            for (int iz = 0; iz < N; ++iz) {
                Point4 x{t, ix * dx, iy * dx, iz * dx};
                sum += std::real(c.t_density(x));
            }
    return sum * w;
}

EBPair eb_split(const SolutionField& f, const Point4& x) {
    EBPair out;
    out.twos = f.twos;
    out.hybrid = (f.twos % 2 != 0);
    SymSpinor G = eb_field(f).eval(x);
    if (out.hybrid) {
        out.E = G;
        out.B = SymSpinor(G.p(), G.q());
    } else {
        out.E = (G + conjugate(G)) * 0.5;
        out.B = (G - conjugate(G)) * cplx(0, -0.5);
    }
    return out;
}

double split_residual(const SolutionField& f, const Point4& x) {
    PolyExpField G = eb_field(f);
    double scale = field_scale(f, x) * std::max(1.0, f.pef.max_wavenumber());
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    auto note = [&](const PolyExpField& r) { worst = std::max(worst, r.eval(x).max_norm()); };
    if (f.twos % 2 == 0) {
        PolyExpField E = (G + G.conj()) * 0.5;
        PolyExpField B = (G - G.conj()) * cplx(0, -0.5);
        note(E.deriv(0) - curl_field(B));
        note(B.deriv(0) + curl_field(E));
        note(div_field(E));
        note(div_field(B));
    } else if (f.twos == 1) {
        note(G.deriv(0) + dplus_curl(G) * cplx(0, 1));
    } else {
        note(G.deriv(0) + curl_field(G) * cplx(0, 1));
        note(div_field(G));
    }
    return worst / scale;
}

double eb_reconstruction_defect(const SolutionField& f, const Point4& x) {
    PolyExpField G = eb_field(f);
    const int napply = (f.twos + 1) / 2;
    for (int r = 0; r < napply; ++r) G = pef_map_grids(G, -1, +1, &grid_tcontract_inv);
    double factor = std::pow(2.0, napply);
    SymSpinor rec = G.eval(x) * factor;
    SymSpinor want = conjugate_field(f).eval(x);
    double scale = std::max(1.0, want.max_norm());
    return (rec - want).max_norm() / scale;
}

CVec4 default_polarization() {
    return CVec4{0, kInvSqrt2, cplx(0, kInvSqrt2), 0};
}

DensityValues densities(const SolutionField& f, const Point4& x, const CVec4& u) {
    Jet jet = jet_at(f, x, 1);
    DensityValues out;
    cplx e = energy_density(jet), z = zilch_density(jet);
    cplx W = chiral_complex_density(jet, u);
    out.energy = e.real();
    out.zilch = z.real();
    out.chiral_plus = 2.0 * W.real();
    out.chiral_minus = -2.0 * W.imag();
    out.imag_defect = std::max(std::abs(e.imag()), std::abs(z.imag()));
    return out;
}

int independence_rank(const std::vector<CurrentFactory>& currents,
                      const std::vector<SolutionField>& families, double t, int N, double L,
                      double tol) {
    if (families.size() < currents.size())
        throw std::invalid_argument("independence_rank: need at least as many families as currents");
    Eigen::MatrixXd M(currents.size(), 2 * families.size());
    for (size_t i = 0; i < currents.size(); ++i)
        for (size_t j = 0; j < families.size(); ++j) {
            CurrentEval c = currents[i](families[j]);
            M(i, 2 * j) = conserved_quantity(c, t, N, L);
            M(i, 2 * j + 1) = conserved_quantity(c, t + 0.37, N, L);
        }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    double smax = svd.singularValues()(0);
    if (smax == 0.0) return 0;
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol * smax) ++rank;
    return rank;
}

SolutionField random_commensurate_family(Rng& rng, int twos, int nmodes, double L, int max_h) {
    std::vector<Mode> modes;
    for (int m = 0; m < nmodes; ++m) {
        int mx = 0, my = 0, mz = 0;
        do {
            mx = rng.int_sym(max_h);
            my = rng.int_sym(max_h);
            mz = rng.int_sym(max_h);
        } while (mx == 0 && my == 0 && mz == 0);
        double kx = kTwoPi / L * mx, ky = kTwoPi / L * my, kz = kTwoPi / L * mz;
        double kt = std::sqrt(kx * kx + ky * ky + kz * kz);
        // factor the null covector grid k = alpha conj(alpha)
        SymSpinor g = covector_spinor(Vec4{kt, kx, ky, kz});
        SymSpinor alpha(1, 0);
        double g00 = g.at(0, 0).real();
        if (g00 > 1e-12) {
            alpha.at(0) = std::sqrt(g00);
            alpha.at(1) = std::conj(g.at(0, 1)) / std::sqrt(g00);
        } else {
            alpha.at(1) = std::sqrt(std::max(0.0, g.at(1, 1).real()));
        }
        modes.push_back({alpha, rng.complex_unit_disk(), rng.uniform() < 0.5 ? 1 : -1});
    }
    return superposition(twos, modes);
}

} // namespace spincons
