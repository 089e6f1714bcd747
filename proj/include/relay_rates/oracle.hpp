#pragma once

#include "relay_rates/cadf.hpp"

namespace relay {

// Brute-force reference optimizers used by tests to validate the structured
// solvers. They evaluate the same rate expression as the production path and
// differ only in how the search space is covered (exhaustive lattices), so
// they validate search strategy, not the formula. Cost grows as n_grid^6.
RateReport brute_force_cadf(const ChannelParams& p, int n_grid, bool parallel = true);

// Dense (alpha1, alpha2) grid max-min for fixed splits, mismatch constraints.
double brute_force_inner(const ChannelParams& p, const BandPowerSplit& s1,
                         const BandPowerSplit& s2, int n_grid);

}  // namespace relay
