#pragma once

#include <cmath>
#include <optional>

#include "relay_rates/allocation.hpp"
#include "relay_rates/core_model.hpp"

namespace relay {

// Dimension/power division of a two-phase time-sharing block: phase A (the
// stronger scheme) gets t1 of the BC dimensions and t2 of the MAC dimensions,
// phase B (DF) the rest; per-phase powers conserve the average power budget.
struct TimeSharePlan {
    double t1 = 1.0;
    double t2 = 1.0;
    double ps_a = 0.0, ps_b = 0.0;
    double pr_a = 0.0, pr_b = 0.0;
};

// A scheme's achieved rate plus the configuration that achieves it. bc_cut and
// mac_cut are the two arguments of the outer min where the scheme has that
// structure (NaN when not populated, e.g. time-sharing composites).
struct RateReport {
    Scheme scheme = Scheme::CUTSET;
    double rate = 0.0;
    RateUnits units = RateUnits::per_mac_dim;
    double bc_cut = std::nan("");
    double mac_cut = std::nan("");
    std::optional<CadfAllocation> allocation;
    std::optional<double> hop_w;        // BC-hop bandwidth share (half-duplex baselines)
    std::optional<TimeSharePlan> plan;  // time-sharing composites
    bool cf_saturated = false;
    double cf_residual = std::nan("");

    bool has_cuts() const { return !std::isnan(bc_cut) && !std::isnan(mac_cut); }
};

}  // namespace relay
