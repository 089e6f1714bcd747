#include <doctest.h>

#include <cmath>

#include "relay_rates/baseline_schemes.hpp"
#include "relay_rates/cadf.hpp"
#include "relay_rates/sampling.hpp"

using namespace relay;

namespace {

CadfAllocation af_degenerate(const ChannelParams& p) {
    CadfAllocation a;
    a.alpha = {std::min(1.0, p.rho), 0.0};
    a.beta1 = p.rho - a.alpha[0];
    a.beta2 = 1.0 - a.alpha[0];
    a.splits = {af_degenerate_split(p), df_degenerate_split(p)};
    return a;
}

CadfAllocation df_degenerate(const ChannelParams& p) {
    CadfAllocation a;
    a.beta1 = p.rho;
    a.beta2 = 1.0;
    a.splits = {df_degenerate_split(p), df_degenerate_split(p)};
    return a;
}

}  // namespace

TEST_CASE("degenerate allocations collapse to the closed-form schemes") {
    for (ChannelParams p : {ChannelParams{1, 3.0, 3.0, 1.0}, ChannelParams{4, 300.0, 2.5, 1.0},
                            ChannelParams{8, 10.0, 37.5, 1.0}}) {
        RateReport r = cadf_rate_successive(p, af_degenerate(p));
        CHECK(std::abs(r.rate - rate_af(p)) <= 1e-12 * std::max(1.0, rate_af(p)));
    }
    for (ChannelParams p : {ChannelParams{1, 3.0, 3.0, 1.0}, ChannelParams{4, 300.0, 2.5, 0.5},
                            ChannelParams{8, 10.0, 37.5, 2.0}}) {
        RateReport r = cadf_rate_successive(p, df_degenerate(p));
        CHECK(std::abs(r.rate - rate_df(p)) <= 1e-12 * std::max(1.0, rate_df(p)));
    }
}

TEST_CASE("pinned two-cut evaluation") {
    // M=2, Ps=3, Pr=3, rho=1, single band: ps_af=2, ps_df=1, pr_af=1, pr_df=2.
    ChannelParams p{2, 3.0, 3.0, 1.0};
    CadfAllocation a;
    a.alpha = {1.0, 0.0};
    a.beta1 = 0.0;
    a.beta2 = 0.0;
    a.splits[0] = {2.0, 1.0, 1.0, 2.0};
    a.splits[1] = df_degenerate_split(p);

    BandSnrs x = band_snrs(p, a.splits[0]);
    CHECK(x.af == doctest::Approx(1.6).epsilon(1e-15));
    CHECK(x.bc_df == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(x.mac_df == doctest::Approx(24.0 / 13.0).epsilon(1e-15));
    CHECK(x.sum == doctest::Approx(6.4).epsilon(1e-15));

    RateReport r = cadf_rate_successive(p, a);
    CHECK(r.bc_cut == doctest::Approx(0.896774561266287).epsilon(1e-14));
    CHECK(r.mac_cut == doctest::Approx(1.44376263537079).epsilon(1e-14));
    CHECK(r.rate == doctest::Approx(0.896774561266287).epsilon(1e-14));
    CHECK(r.rate == std::min(r.bc_cut, r.mac_cut));

    RateReport r_sum = cadf_rate_sumrate(p, a);
    CHECK(std::abs(r_sum.rate - r.rate) <= 1e-14);
    CHECK(std::abs(r_sum.mac_cut - r.mac_cut) <= 1e-14);
}

TEST_CASE("the two rate forms agree on random feasible allocations") {
    Rng rng(505);
    for (int i = 0; i < 3000; ++i) {
        ChannelParams p = sample_params(rng);
        CadfAllocation a = sample_allocation(rng, p);
        RateReport r_succ = cadf_rate_successive(p, a);
        RateReport r_sum = cadf_rate_sumrate(p, a);
        double scale = std::max({std::abs(r_succ.rate), std::abs(r_sum.rate), 1.0});
        CHECK(std::abs(r_succ.rate - r_sum.rate) <= 1e-12 * scale);
        CHECK(std::abs(r_succ.mac_cut - r_sum.mac_cut) <=
              1e-12 * std::max({r_succ.mac_cut, r_sum.mac_cut, 1.0}));
    }
}

TEST_CASE("infeasible allocations are rejected with the violated constraint named") {
    ChannelParams p{2, 3.0, 3.0, 1.0};
    CadfAllocation a = af_degenerate(p);
    a.beta1 = 0.5;  // breaks the BC budget
    CHECK_THROWS_WITH_AS(cadf_rate_successive(p, a),
                         doctest::Contains("BC bandwidth budget"), std::invalid_argument);
    a = af_degenerate(p);
    a.beta2 = 0.25;
    CHECK_THROWS_WITH_AS(cadf_rate_successive(p, a),
                         doctest::Contains("MAC bandwidth budget"), std::invalid_argument);
    a = af_degenerate(p);
    a.splits[0].ps_af = 1.0;  // ps_af + ps_df != Ps
    CHECK_THROWS_WITH_AS(cadf_rate_successive(p, a),
                         doctest::Contains("source power split"), std::invalid_argument);
    a = af_degenerate(p);
    a.alpha[1] = -0.2;
    CHECK_THROWS_WITH_AS(cadf_rate_successive(p, a),
                         doctest::Contains("negative band fraction"), std::invalid_argument);
}

TEST_CASE("zero-power band edges") {
    ChannelParams p{2, 3.0, 3.0, 1.0};
    // Analog branch fully off in the shared band: BC side sees the plain
    // digital rate, MAC side the coherent digital rate.
    CadfAllocation a;
    a.alpha = {1.0, 0.0};
    a.splits = {df_degenerate_split(p), df_degenerate_split(p)};
    RateReport r = cadf_rate_sumrate(p, a);
    CHECK(r.bc_cut == doctest::Approx(capacity(p.ps)).epsilon(1e-15));
    CHECK(r.mac_cut == doctest::Approx(capacity(4.0 * p.pr)).epsilon(1e-15));
}

TEST_CASE("mac corner: pinned values and edge cases") {
    ChannelParams p{2, 3.0, 3.0, 1.0};
    BandPowerSplit s{2.0, 1.0, 1.0, 2.0};
    MacCorner c = mac_corner(p, 1.0, s);
    CHECK(c.r_af == doctest::Approx(0.689255811626865).epsilon(1e-14));
    CHECK(c.sum == doctest::Approx(1.44376263537079).epsilon(1e-14));
    CHECK(c.r_df == doctest::Approx(0.754506823743929).epsilon(1e-13));
    CHECK(std::abs(c.r_af + c.r_df - c.sum) <= 1e-12 * c.sum);

    // no digital power at the relay
    BandPowerSplit s2{2.0, 1.0, 3.0, 0.0};
    MacCorner c2 = mac_corner(p, 0.7, s2);
    CHECK(c2.r_df == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(c2.r_af == doctest::Approx(0.7 * capacity(band_snrs(p, s2).af)).epsilon(1e-15));

    // No analog power at the relay: nothing reaches the destination on the
    // analog branch, so the digital message keeps the full coherent gain.
    BandPowerSplit s3{2.0, 1.0, 0.0, 3.0};
    MacCorner c3 = mac_corner(p, 1.0, s3);
    CHECK(c3.r_af == 0.0);
    CHECK(c3.sum == doctest::Approx(capacity(4.0 * 3.0)).epsilon(1e-15));
}

TEST_CASE("successive decoding achieves the corner on random splits") {
    Rng rng(606);
    for (int i = 0; i < 3000; ++i) {
        ChannelParams p = sample_params(rng);
        BandPowerSplit s = sample_split(rng, p);
        SuccessiveWitness w = successive_decoding_check(p, s);
        CHECK(w.ok);
        CHECK(w.rel_error <= 1e-12);
    }
    // digital branch off: single-user band, trivially consistent
    ChannelParams p{3, 5.0, 2.0, 1.0};
    SuccessiveWitness w = successive_decoding_check(p, af_degenerate_split(p));
    CHECK(w.ok);
    CHECK(w.snr_df_succ == 0.0);
}

TEST_CASE("corner digital rate stays below its standalone bound") {
    Rng rng(707);
    for (int i = 0; i < 2000; ++i) {
        ChannelParams p = sample_params(rng);
        BandPowerSplit s = sample_split(rng, p);
        double m = p.M;
        double bound = capacity(m * m * s.pr_df * (s.ps_af + 1.0) /
                                (m * s.pr_af + s.ps_af + 1.0));
        MacCorner c = mac_corner(p, 1.0, s);
        CHECK(c.r_df <= bound + 1e-9 * (1.0 + bound));
    }
}

TEST_CASE("mismatch inner solver: exactness on hand cases") {
    // Identical bands, cuts equalize on the alpha axis.
    BandCoefs b{1.0, 2.0};
    // bc(a) = 0.5*rho + (1-0.5)a, mac(a) = 3 + (2-3)a with cap_bc=0.5, cap_mac=3, rho=1:
    // crossing at a = (3-0.5)/( (1-0.5)-(2-3) ) = 2.5/1.5 > amax=1 -> vertex a=1 optimal.
    InnerPoint pt = solve_inner_mismatch(b, b, 0.5, 3.0, 1.0);
    CHECK(pt.a1 + pt.a2 == doctest::Approx(1.0));
    CHECK(pt.rate == doctest::Approx(std::min(1.0, 2.0)).epsilon(1e-15));

    // Balanced crossing inside the edge.
    BandCoefs b2{2.0, 0.5};
    // bc = 1*rho + (2-1)a, mac = 4 + (0.5-4)a; rho=1: crossing 1+a = 4-3.5a -> a=2/3
    InnerPoint pt2 = solve_inner_mismatch(b2, b2, 1.0, 4.0, 1.0);
    CHECK(pt2.a1 + pt2.a2 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(pt2.bc == doctest::Approx(pt2.mac).epsilon(1e-12));
}

TEST_CASE("mismatch inner solver matches a dense grid on random coefficients") {
    Rng rng(808);
    for (int i = 0; i < 300; ++i) {
        BandCoefs b1{rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0)};
        BandCoefs b2{rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0)};
        double cap_bc = rng.uniform(0.1, 4.0), cap_mac = rng.uniform(0.1, 4.0);
        double rho = rng.log_uniform(0.1, 10.0);
        InnerPoint v = solve_inner_mismatch(b1, b2, cap_bc, cap_mac, rho);

        double amax = std::min(1.0, rho);
        int n = 257;
        double grid = -1.0;
        for (int ia = 0; ia < n; ++ia)
            for (int ja = 0; ja + ia <= n - 1; ++ja) {
                double a1 = amax * ia / (n - 1), a2 = amax * ja / (n - 1);
                double bc = cap_bc * (rho - a1 - a2) + b1.bc * a1 + b2.bc * a2;
                double mac = cap_mac * (1.0 - a1 - a2) + b1.mac * a1 + b2.mac * a2;
                grid = std::max(grid, std::min(bc, mac));
            }
        CHECK(v.rate >= grid - 1e-12);
        double lip = std::abs(b1.bc - cap_bc) + std::abs(b2.bc - cap_bc) +
                     std::abs(b1.mac - cap_mac) + std::abs(b2.mac - cap_mac);
        CHECK(v.rate <= grid + 2.0 * lip * amax / (n - 1) + 1e-12);
    }
}

TEST_CASE("half-duplex inner solver covers the digital and single-band patterns") {
    // Pure digital relaying: value is the harmonic split of the two cut slopes.
    BandCoefs dfband{1.0, 2.0};
    InnerPoint pt = solve_inner_half_duplex(dfband, dfband, 1.0, 2.0);
    CHECK(pt.rate >= 1.0 * 2.0 / 3.0 - 1e-12);

    Rng rng(909);
    for (int i = 0; i < 300; ++i) {
        BandCoefs b1{rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0)};
        BandCoefs b2{rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0)};
        double cap_bc = rng.uniform(0.1, 4.0), cap_mac = rng.uniform(0.1, 4.0);
        InnerPoint v = solve_inner_half_duplex(b1, b2, cap_bc, cap_mac);

        // Dense check over the pattern set the solver enumerates.
        int n = 513;
        double grid = -1.0;
        auto value = [&](double a1, double a2, double be1, double be2) {
            double bc = b1.bc * a1 + b2.bc * a2 + cap_bc * be1;
            double mac = b1.mac * a1 + b2.mac * a2 + cap_mac * be2;
            return std::min(bc, mac);
        };
        for (int k = 0; k < n; ++k) {
            double t = static_cast<double>(k) / (n - 1);
            grid = std::max(grid, value(0.5 * t, 0, 1.0 - t, 0));
            grid = std::max(grid, value(0.5 * t, 0, 0, 1.0 - t));
            grid = std::max(grid, value(0, 0.5 * t, 1.0 - t, 0));
            grid = std::max(grid, value(0, 0.5 * t, 0, 1.0 - t));
            grid = std::max(grid, value(0, 0, t, 1.0 - t));
        }
        CHECK(v.rate >= grid - 1e-9);
    }
}
