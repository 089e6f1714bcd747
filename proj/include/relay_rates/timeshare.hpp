#pragma once

#include "relay_rates/cadf_optimize.hpp"
#include "relay_rates/report.hpp"

namespace relay {

struct TimeShareConfig {
    int t_steps = 64;        // (t1, t2) lattice at 1/t_steps resolution
    int power_points = 17;   // per-phase power fraction lattice
    int t_refine_points = 9; // one refinement pass around the incumbent (t1, t2)
    OptimizerConfig cadf_full{};  // endpoint anchors and pure-scheme references
    OptimizerConfig cadf_quick{5, 2, 0, 0.2, false, true, false};  // in-sweep phase-A solver
    bool parallel = true;

    void validate() const;
};

// Best time-sharing composite of scheme A in {CADF, RF, AF} with DF for the
// equal-bandwidth setup (requires p.rho == 1). Rates are per BC+MAC dimension
// pair, so t-degenerate plans reproduce the pure per-MAC-dim rates exactly.
RateReport optimize_timeshare(Scheme variant, const ChannelParams& p,
                              const TimeShareConfig& cfg = {});

}  // namespace relay
