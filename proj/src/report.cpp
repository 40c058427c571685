#include "spincons/report.hpp"

#include <json.hpp>

namespace spincons {

std::string QuantityReport::to_json(int indent) const {
    nlohmann::json j;
    j["current"] = current;
    j["spin"] = spin;
    j["order"] = order;
    j["seed"] = seed;
    j["residual_max"] = residual_max;
    j["quantities"] = nlohmann::json::array();
    for (const auto& [t, v] : quantities) j["quantities"].push_back({{"t", t}, {"value", v}});
    j["parity"] = {{"duality", duality_parity_defect}};
    j["reality"] = reality_defect;
    j["time_independence"] = time_independence_defect;
    j["tolerances"] = {{"residual", tol_residual}, {"quantity", tol_quantity}};
    j["pass"] = pass;
    j["version"] = kVersion;
    return j.dump(indent);
}

std::string spin_label(int twos) {
    if (twos % 2 == 0) return std::to_string(twos / 2);
    return std::to_string(twos) + "/2";
}

int parse_spin_label(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            int whole = std::stoi(s);
            if (whole < 1) throw std::invalid_argument("spin must be >= 1/2");
            return 2 * whole;
        }
        int num = std::stoi(s.substr(0, slash));
        int den = std::stoi(s.substr(slash + 1));
        if (den != 2 || num < 1 || num % 2 == 0)
            throw std::invalid_argument("spin must be a half-integer like 1/2 or 3/2");
        return num;
    } catch (const std::exception&) {
        throw std::invalid_argument("unparseable spin '" + s + "'");
    }
}

} // namespace spincons
