#include <doctest.h>

#include <cmath>

#include "relay_rates/baseline_schemes.hpp"
#include "relay_rates/cadf_optimize.hpp"
#include "relay_rates/oracle.hpp"
#include "relay_rates/sampling.hpp"

using namespace relay;

TEST_CASE("oracle rejects undersized grids") {
    CHECK_THROWS_AS(brute_force_cadf({1, 3.0, 3.0, 1.0}, 4), std::invalid_argument);
}

TEST_CASE("oracle matches degenerate closed forms at channel extremes") {
    // Tiny relay power: analog forwarding dominates and sits on the lattice.
    ChannelParams p{2, 1000.0, 0.01, 1.0};
    RateReport r = brute_force_cadf(p, 5);
    CHECK(r.rate >= rate_af(p) - 1e-12);
    CHECK(r.rate <= rate_cutset(p) + 1e-12);

    // Wide BC band with weak MAC: digital relaying achieves the bound.
    ChannelParams q{2, 100.0, 0.5, 4.0};
    RateReport rq = brute_force_cadf(q, 5);
    CHECK(std::abs(rq.rate - capacity(4.0 * q.pr)) <= 1e-12);
}

TEST_CASE("oracle approaches the MAC cut from below in the capacity case") {
    ChannelParams p{1, 50.0, 1.0, 6.0};
    double cap = capacity(p.pr);
    double r9 = brute_force_cadf(p, 9).rate;
    CHECK(r9 <= cap + 1e-12);
    CHECK(cap - r9 <= 1e-9);
}

TEST_CASE("oracle is monotone under lattice refinement") {
    Rng rng(555);
    for (int i = 0; i < 6; ++i) {
        ChannelParams p = sample_params(rng);
        double r5 = brute_force_cadf(p, 5).rate;
        double r9 = brute_force_cadf(p, 9).rate;
        double r17 = brute_force_cadf(p, 17).rate;
        CHECK(r9 >= r5 - 1e-15);
        CHECK(r17 >= r9 - 1e-15);
    }
}

TEST_CASE("oracle is deterministic") {
    ChannelParams p{3, 25.0, 4.0, 0.7};
    RateReport a = brute_force_cadf(p, 9);
    RateReport b = brute_force_cadf(p, 9);
    CHECK(a.rate == b.rate);
    CHECK(a.allocation->alpha[0] == b.allocation->alpha[0]);
    CHECK(a.allocation->splits[0].ps_af == b.allocation->splits[0].ps_af);
}

TEST_CASE("optimizer dominates the oracle lattice") {
    Rng rng(666);
    for (int i = 0; i < 4; ++i) {
        ChannelParams p = sample_params(rng);
        double opt = optimize_cadf(p).rate;
        double oracle = brute_force_cadf(p, 13).rate;
        CHECK(opt >= oracle - 1e-9);
        CHECK(opt - oracle <= 1e-2);
    }
}

TEST_CASE("brute-force inner grid: beta-only restriction reproduces digital relaying") {
    ChannelParams p{2, 3.0, 3.0, 0.5};
    BandPowerSplit df = df_degenerate_split(p);
    double grid = brute_force_inner(p, df, df, 257);
    CHECK(grid == doctest::Approx(rate_df(p)).epsilon(1e-12));
}
