#include "spincons/counting.hpp"

namespace spincons {

int64_t killing_dim(int k, int twol) {
    if (k < 0 || twol < 0 || twol % 2) throw std::invalid_argument("killing_dim: bad type");
    int64_t K = k, L2 = twol;
    int64_t prod = (K + 1) * (K + 2) * (K + L2 + 1) * (K + L2 + 2) * (2 * K + L2 + 3);
    return prod / 12;
}

CurrentCounts current_counts(int twos, int n) {
    if (twos < 1 || n < 0) throw std::invalid_argument("current_counts: bad arguments");
    int64_t S = twos, N = n;
    CurrentCounts c;
    // (1/3)(s+n)^2 (2s+2n+1)^2 (4s+4n+1) etc., written in twice-spin
    c.T = (S + 2 * N) * (S + 2 * N) * (S + 2 * N + 1) * (S + 2 * N + 1) * (2 * S + 4 * N + 1) / 12;
    c.Z = (S + 2 * N + 2) * (S + 2 * N + 2) * (S + 2 * N + 1) * (S + 2 * N + 1) *
          (2 * S + 4 * N + 3) / 12;
    c.V = 2 * (N + 1) * (2 * N + 3) * (S + N + 1) * (2 * S + 2 * N + 3) * (2 * S + 4 * N + 5) / 3;
    return c;
}

int64_t weight_dims(int twos, int w) {
    if (twos < 1 || w < 1) throw std::invalid_argument("weight_dims: bad arguments");
    int64_t S = twos, W = w;
    if (w % 2) return (S + W) * (S + W) * (S + W + 1) * (S + W + 1) * (2 * S + 2 * W + 1) / 12;
    return (2 * S + 2 * W + 1) *
           (2 * W * (W + 1) * (2 * S + W) * (2 * S + W + 1) + (S + W) * (S + W) * (S + W + 1) * (S + W + 1)) /
           12;
}

ConsistencyReport consistency_check(int twos, int w_max) {
    ConsistencyReport rep;
    rep.twos = twos;
    for (int w = 1; w <= w_max; ++w) {
        ConsistencyRow row;
        row.w = w;
        row.weight_dim = weight_dims(twos, w);
        if (w % 2) {
            // zilch block: currents of order n = (w-1)/2; Killing type
            // (2s+w-1, 2s+w-1)_R
            int n = (w - 1) / 2;
            row.from_counts = current_counts(twos, n).Z;
            row.from_killing = killing_dim(twos + w - 1, 0);
        } else {
            // stress-energy at n = w/2 plus chiral at n = w/2 - 1; the chiral
            // type (w-1, w+4s-1) is complex, so it counts twice
            int nT = w / 2, nV = w / 2 - 1;
            row.from_counts = current_counts(twos, nT).T + current_counts(twos, nV).V;
            row.from_killing = killing_dim(twos + w - 1, 0) + 2 * killing_dim(w - 1, 2 * twos);
        }
        row.ok = (row.weight_dim == row.from_counts) && (row.weight_dim == row.from_killing);
        rep.rows.push_back(row);
        rep.all_ok = rep.all_ok && row.ok;
    }
    return rep;
}

std::vector<BasisEntry> enumerate_basis(int twos, int w, int max_count) {
    if (twos < 1 || w < 0) throw std::invalid_argument("enumerate_basis: bad arguments");
    int64_t expected;
    if (w == 0)
        expected = current_counts(twos, 0).T;
    else if (w % 2)
        expected = current_counts(twos, (w - 1) / 2).Z;
    else
        expected = current_counts(twos, w / 2).T + current_counts(twos, w / 2 - 1).V;
    if (expected > max_count)
        throw std::length_error("enumerate_basis: class count exceeds the desk-scale bound");

    std::vector<BasisEntry> out;
    auto gens = ckv_generators();
    if (w == 0) {
        // stress-energy classes <-> type (2s-1, 2s-1)_R Killing spinors
        auto basis = killing_basis(twos - 1, 0);
        for (const auto& xi : basis) {
            BasisEntry e;
            e.label = "T[" + (xi.label.empty() ? std::string("xi") : xi.label) + "]";
            KillingSpinor cap = xi;
            e.factory = [cap, gens](const SolutionField& f) {
                return density_current_T(f, 0, gens[0], cap);
            };
            out.push_back(std::move(e));
        }
        return out;
    }
    if (w == 1) {
        // zilch classes <-> type (2s, 2s)_R; spanned by Z-density currents
        // over products xi (x) zeta of the weight-0 basis and the 15 CKVs
        auto xis = killing_basis(twos - 1, 0);
        for (const auto& xi : xis)
            for (const auto& z : gens) {
                BasisEntry e;
                e.label = "Z[" + (xi.label.empty() ? std::string("xi") : xi.label) + ";" +
                          z.label + "]";
                KillingSpinor capx = xi;
                KillingSpinor capz = z;
                e.factory = [capx, capz](const SolutionField& f) {
                    return density_current_Z(f, 1, capz, capx);
                };
                out.push_back(std::move(e));
            }
        return out;  // spanning set; rank selection happens in the caller
    }
    throw std::length_error("enumerate_basis: weight beyond the desk-scale cases");
}

} // namespace spincons
