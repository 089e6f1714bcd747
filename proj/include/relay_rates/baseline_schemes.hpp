#pragma once

#include "relay_rates/core_model.hpp"

namespace relay {

// Solution of the compress-and-forward implicit power equation
//   (1 + M*Pr)^(1/rho) = 1 + p * (M*Ps / (M*Ps - p + 1))^M
// over p in (0, M*Ps + 1).
struct CfSolution {
    double p_cf = 0.0;      // effective end-to-end SNR of the CF scheme
    double residual = 0.0;  // |LHS - RHS| at p_cf
    bool saturated = false; // LHS above the RHS on the whole bracket; p_cf at the upper edge
};

double rate_cutset(const ChannelParams& p);  // min(rho*C(M*Ps), C(M^2*Pr))
double rate_df(const ChannelParams& p);      // min(rho*C(Ps), C(M^2*Pr))
double rate_af(const ChannelParams& p);      // gamma*C(M^2*Pr*Ps/(M*Pr+Ps+1)), gamma=min(rho,1)

CfSolution solve_cf_fixed_point(const ChannelParams& p);
double rate_cf(const ChannelParams& p, const CfSolution& sol);  // rho*C(p_cf)
double rate_cf(const ChannelParams& p);

// Rematch-and-forward rate; requires ps > 1. Throws std::domain_error otherwise.
double rate_rf(const ChannelParams& p);

}  // namespace relay
