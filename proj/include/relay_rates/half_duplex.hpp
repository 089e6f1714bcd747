#pragma once

#include "relay_rates/cadf_optimize.hpp"
#include "relay_rates/report.hpp"

namespace relay {

// BC-hop share of the unit total bandwidth; the MAC hop gets 1 - w.
struct HopSplit {
    double w = 0.5;
};

// Best per-total-dimension rate of a scheme when both hops share one unit of
// bandwidth. Baselines maximize (1-w) * R(rho = w/(1-w)) over w; CADF
// optimizes its allocation under the shared-budget constraint directly.
// p.rho is ignored. RF requires ps > 1 (std::domain_error otherwise).
RateReport hd_rate(Scheme scheme, const ChannelParams& p, const OptimizerConfig& cfg = {});

}  // namespace relay
