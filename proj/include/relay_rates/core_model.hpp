#pragma once

#include <stdexcept>
#include <string>

namespace relay {

// Symmetric Gaussian parallel relay channel instance. All powers are linear
// per-dimension values (noise variance is fixed at 1 per dimension); dB
// conversion lives in the CLI layer only.
struct ChannelParams {
    int M = 1;         // number of relays
    double ps = 1.0;   // source power per dimension
    double pr = 1.0;   // per-relay power per dimension
    double rho = 1.0;  // BC channel uses per MAC channel use

    void validate() const;  // throws std::invalid_argument
};

enum class RateUnits { per_mac_dim, per_total_dim };

const char* to_string(RateUnits u);

enum class Scheme { CADF, AF, DF, CF, RF, CUTSET, CADF_DF, RF_DF, AF_DF };

const char* to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);  // throws std::invalid_argument

// Scalar Gaussian capacity, 0.5*log2(1+x) bits per dimension.
// Throws std::domain_error for negative or non-finite x.
double capacity(double x);

double db_to_linear(double x_db);  // 10^(x/10)
double linear_to_db(double x);     // 10*log10(x), requires x > 0

}  // namespace relay
