#include "relay_rates/core_model.hpp"

#include <cmath>

namespace relay {

void ChannelParams::validate() const {
    if (M < 1)
        throw std::invalid_argument("ChannelParams: number of relays must be >= 1");
    if (!std::isfinite(ps) || ps <= 0.0)
        throw std::invalid_argument("ChannelParams: source power must be positive and finite");
    if (!std::isfinite(pr) || pr <= 0.0)
        throw std::invalid_argument("ChannelParams: relay power must be positive and finite");
    if (!std::isfinite(rho) || rho <= 0.0)
        throw std::invalid_argument("ChannelParams: bandwidth expansion factor must be positive and finite");
}

const char* to_string(RateUnits u) {
    return u == RateUnits::per_mac_dim ? "per_mac_dim" : "per_total_dim";
}

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::CADF:    return "cadf";
        case Scheme::AF:      return "af";
        case Scheme::DF:      return "df";
        case Scheme::CF:      return "cf";
        case Scheme::RF:      return "rf";
        case Scheme::CUTSET:  return "cutset";
        case Scheme::CADF_DF: return "cadf_df";
        case Scheme::RF_DF:   return "rf_df";
        case Scheme::AF_DF:   return "af_df";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& name) {
    for (Scheme s : {Scheme::CADF, Scheme::AF, Scheme::DF, Scheme::CF, Scheme::RF,
                     Scheme::CUTSET, Scheme::CADF_DF, Scheme::RF_DF, Scheme::AF_DF})
        if (name == to_string(s)) return s;
    throw std::invalid_argument("unknown scheme '" + name + "'");
}

double capacity(double x) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("capacity: argument must be finite and non-negative");
    // log1p keeps small arguments accurate; log2 keeps powers of two exact.
    static const double inv_ln2 = 1.0 / std::log(2.0);
    if (x < 0.5) return 0.5 * std::log1p(x) * inv_ln2;
    return 0.5 * std::log2(1.0 + x);
}

double db_to_linear(double x_db) {
    if (!std::isfinite(x_db))
        throw std::domain_error("db_to_linear: argument must be finite");
    return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("linear_to_db: argument must be positive and finite");
    return 10.0 * std::log10(x);
}

}  // namespace relay
