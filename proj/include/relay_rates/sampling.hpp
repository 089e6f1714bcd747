#pragma once

#include <cstdint>
#include <random>

#include "relay_rates/allocation.hpp"
#include "relay_rates/core_model.hpp"

namespace relay {

uint64_t splitmix64(uint64_t x);

// Deterministic, portable draw source (mt19937_64 sequence is standardized;
// variates are derived by hand so no library distribution is involved).
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    double log_uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive bounds

  private:
    std::mt19937_64 gen_;
};

// Per-index generator: parallel draw loops stay deterministic regardless of
// scheduling because each index owns its stream.
Rng indexed_rng(uint64_t seed, uint64_t index);

// The standard random box: log-uniform powers in [0.1, 1e4], rho in [0.1, 10],
// M uniform in {1..64}; ps is redrawn until > 1 when required.
ChannelParams sample_params(Rng& rng, bool require_ps_gt1 = false);
BandPowerSplit sample_split(Rng& rng, const ChannelParams& p);
CadfAllocation sample_allocation(Rng& rng, const ChannelParams& p);  // mismatch-feasible

}  // namespace relay
