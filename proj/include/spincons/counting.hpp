#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spincons/analysis.hpp"

namespace spincons {

//! Number of linearly independent Killing spinors of type (k, k+2l) over the
//! complex numbers: (k+1)(k+2)(k+2l+1)(k+2l+2)(2k+2l+3)/12.
int64_t killing_dim(int k, int twol);

//! Counts of independent equivalence classes of stress-energy, zilch, and
//! chiral currents at order n for twice-spin S (exact integer arithmetic).
struct CurrentCounts {
    int64_t T = 0, Z = 0, V = 0;
};
CurrentCounts current_counts(int twos, int n);

//! Dimension of the weight-w quadratic-current space: odd w gives the zilch
//! block, even w >= 2 the stress-energy + chiral direct sum.
int64_t weight_dims(int twos, int w);

//! Cross-identities between the count formulas, the weight dimensions and the
//! Killing-type dimensions (the chiral block counts twice its complex
//! dimension, being a complex type).
struct ConsistencyRow {
    int w = 0;
    int64_t weight_dim = 0, from_counts = 0, from_killing = 0;
    bool ok = false;
};
struct ConsistencyReport {
    int twos = 0;
    std::vector<ConsistencyRow> rows;
    bool all_ok = true;
};
ConsistencyReport consistency_check(int twos, int w_max);

//! Current factories spanning the weight-w quotient classes, over the Killing
//! basis; cardinality equals the count formulas.  Desk-scale bound.
struct BasisEntry {
    std::string label;
    CurrentFactory factory;
};
std::vector<BasisEntry> enumerate_basis(int twos, int w, int max_count = 32);

} // namespace spincons
