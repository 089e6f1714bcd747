#include "relay_rates/sampling.hpp"

#include <cmath>

namespace relay {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

int Rng::uniform_int(int lo, int hi) {
    // Modulo bias is immaterial for the tiny ranges used here.
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>((gen_() >> 11) % span);
}

Rng indexed_rng(uint64_t seed, uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index + 1)));
}

ChannelParams sample_params(Rng& rng, bool require_ps_gt1) {
    ChannelParams p;
    p.M = rng.uniform_int(1, 64);
    p.ps = rng.log_uniform(0.1, 1e4);
    if (require_ps_gt1)
        while (p.ps <= 1.0) p.ps = rng.log_uniform(0.1, 1e4);
    p.pr = rng.log_uniform(0.1, 1e4);
    p.rho = rng.log_uniform(0.1, 10.0);
    return p;
}

BandPowerSplit sample_split(Rng& rng, const ChannelParams& p) {
    double fs = rng.uniform01();
    double fr = rng.uniform01();
    BandPowerSplit s;
    s.ps_af = fs * p.ps;
    s.ps_df = p.ps - s.ps_af;
    s.pr_af = fr * p.pr;
    s.pr_df = p.pr - s.pr_af;
    return s;
}

CadfAllocation sample_allocation(Rng& rng, const ChannelParams& p) {
    double amax = std::min(1.0, p.rho);
    CadfAllocation a;
    a.alpha[0] = rng.uniform01() * amax;
    a.alpha[1] = rng.uniform01() * (amax - a.alpha[0]);
    double A = a.alpha[0] + a.alpha[1];
    a.beta1 = std::max(0.0, p.rho - A);
    a.beta2 = std::max(0.0, 1.0 - A);
    a.splits[0] = sample_split(rng, p);
    a.splits[1] = sample_split(rng, p);
    return a;
}

}  // namespace relay
