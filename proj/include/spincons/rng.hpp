#pragma once

#include <cstdint>

#include "spincons/spinor.hpp"

namespace spincons {

//! Explicit 64-bit splitmix generator: identical streams on every platform,
//! so seeded runs are byte-reproducible.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    //! Uniform in [0,1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    //! Uniform in [lo,hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    //! Uniform integer in [0, n).
    uint64_t below(uint64_t n) { return next_u64() % n; }

    //! Signed integer in [-n, n].
    int int_sym(int n) { return int(below(uint64_t(2 * n + 1))) - n; }

    cplx complex_unit_disk() {
        double re = uniform(-1.0, 1.0), im = uniform(-1.0, 1.0);
        return cplx(re, im);
    }

    Vec4 vec4(double lo = -1.0, double hi = 1.0) {
        return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
    }

    SymSpinor spinor(int p, int q, double scale = 1.0) {
        SymSpinor s(p, q);
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j) s.at(i, j) = scale * complex_unit_disk();
        return s;
    }

    //! Random Hermitian (n,n) grid (a real symmetric-tensor value).
    SymSpinor hermitian_spinor(int n, double scale = 1.0) {
        SymSpinor s = spinor(n, n, scale);
        return (s + conjugate(s)) * 0.5;
    }

  private:
    uint64_t state_;
};

} // namespace spincons
