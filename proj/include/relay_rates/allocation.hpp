#pragma once

#include <array>
#include <optional>
#include <string>

#include "relay_rates/core_model.hpp"

namespace relay {

// Source/relay power division between the analog (AF) branch and the
// superimposed digital (DF) branch inside one shared band.
struct BandPowerSplit {
    double ps_af = 0.0;
    double ps_df = 0.0;
    double pr_af = 0.0;
    double pr_df = 0.0;
};

// Bandwidth accounting mode: mismatch uses separate per-hop budgets
// (sum(alpha)+beta1 = rho, sum(alpha)+beta2 = 1); half-duplex shares one unit
// of total bandwidth (2*sum(alpha)+beta1+beta2 = 1).
enum class BandMode { mismatch, half_duplex };

// A full CADF configuration: up to two shared AF/superposition bands plus the
// dedicated DF bands beta1 (BC hop only) and beta2 (MAC hop only).
struct CadfAllocation {
    std::array<double, 2> alpha{0.0, 0.0};
    double beta1 = 0.0;
    double beta2 = 0.0;
    std::array<BandPowerSplit, 2> splits{};
};

BandPowerSplit af_degenerate_split(const ChannelParams& p);  // all power on the AF branch
BandPowerSplit df_degenerate_split(const ChannelParams& p);  // all power on the DF branch

// Returns a description of the first violated constraint, or nullopt if the
// allocation is feasible for p in the given mode (tolerances are absolute on
// band fractions and relative on power sums).
std::optional<std::string> allocation_violation(const ChannelParams& p,
                                                const CadfAllocation& a,
                                                BandMode mode,
                                                double tol = 1e-9);

}  // namespace relay
