#pragma once

#include <string>
#include <vector>

#include "spincons/spinor.hpp"

namespace spincons {

inline constexpr const char* kVersion = "0.1.0";

//! Verification record for one current: quantity samples, residuals, parity
//! and reality verdicts, with the seed and tolerances used.
struct QuantityReport {
    std::string current;   // e.g. "T", "Z", "V", "W"
    std::string spin;      // "1/2", "1", ...
    int order = 0;
    uint64_t seed = 0;
    double residual_max = 0;
    std::vector<std::pair<double, double>> quantities;  // (t, value)
    double duality_parity_defect = 0;
    double reality_defect = 0;
    double time_independence_defect = 0;
    double tol_residual = 1e-6;
    double tol_quantity = 1e-9;
    bool pass = false;

    std::string to_json(int indent = 2) const;
};

std::string spin_label(int twos);
int parse_spin_label(const std::string& s);  // "1/2" -> 1, "2" -> 4; throws on bad input

} // namespace spincons
