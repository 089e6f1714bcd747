#pragma once

#include "relay_rates/allocation.hpp"
#include "relay_rates/report.hpp"

namespace relay {

// SNR arguments of the per-band rate terms for one shared band:
//   af      — analog message decoded after the digital one is stripped
//   bc_df   — digital message at a relay, analog branch as interference
//   mac_df  — digital message at the destination under successive decoding
//   sum     — joint sum-rate of both messages at the destination
// The exact identity (1+af)*(1+mac_df) = 1+sum ties the successive and
// sum-rate forms together.
struct BandSnrs {
    double af = 0.0;
    double bc_df = 0.0;
    double mac_df = 0.0;
    double sum = 0.0;
};

BandSnrs band_snrs(const ChannelParams& p, const BandPowerSplit& s);

// Per-band cut coefficients: bc = C(af)+C(bc_df) on the BC cut, mac = C(sum)
// on the MAC cut. These are what the inner bandwidth allocation is affine in.
struct BandCoefs {
    double bc = 0.0;
    double mac = 0.0;
};

BandCoefs band_coefs(const ChannelParams& p, const BandPowerSplit& s);

// CADF rate in the successive-decoding form: common AF sum plus the min of
// the BC-side and MAC-side digital terms. Throws std::invalid_argument when
// the allocation violates its constraints (naming the violated one).
RateReport cadf_rate_successive(const ChannelParams& p, const CadfAllocation& a,
                                BandMode mode = BandMode::mismatch);

// Same rate in the two-cut form whose MAC cut uses the joint sum-rate SNR;
// kept as an independent cross-check of cadf_rate_successive.
RateReport cadf_rate_sumrate(const ChannelParams& p, const CadfAllocation& a,
                             BandMode mode = BandMode::mismatch);

// Corner of the per-band two-user MAC region: analog-message rate at the
// corner, the sum rate, and the digital rate as their difference.
struct MacCorner {
    double r_af = 0.0;
    double r_df = 0.0;
    double sum = 0.0;
};

MacCorner mac_corner(const ChannelParams& p, double l_frac, const BandPowerSplit& s);

// Verifies that the MAC-region corner is achieved by decoding the digital
// message first: C(af) + C(mac_df) == C(sum) via the exact product identity.
struct SuccessiveWitness {
    double snr_af = 0.0;
    double snr_df_succ = 0.0;
    double snr_sum = 0.0;
    double rel_error = 0.0;
    bool ok = false;
};

SuccessiveWitness successive_decoding_check(const ChannelParams& p, const BandPowerSplit& s,
                                            double rel_tol = 1e-12);

// ---------------------------------------------------------------------------
// Inner bandwidth allocation for fixed power splits. With the beta bands
// eliminated through the equality constraints both cuts are affine in
// (alpha1, alpha2); the max-min optimum lies at a polytope vertex or at a
// cut-equalization point on an edge, so finite enumeration is exact.
// ---------------------------------------------------------------------------

struct InnerPoint {
    double rate = -1.0;
    double a1 = 0.0, a2 = 0.0;
    double beta1 = 0.0, beta2 = 0.0;
    double bc = 0.0, mac = 0.0;
};

// Mismatch-mode inner problem over the triangle a1,a2 >= 0, a1+a2 <= min(1,rho);
// beta1 = rho - A, beta2 = 1 - A.
InnerPoint solve_inner_mismatch(const BandCoefs& b1, const BandCoefs& b2,
                                double cap_bc, double cap_mac, double rho);
InnerPoint solve_inner_mismatch_1band(const BandCoefs& b1,
                                      double cap_bc, double cap_mac, double rho);

// Half-duplex inner problem over 2*(a1+a2) + beta1 + beta2 = 1; enumerates the
// single-band support patterns {a_i}, {a_i,b_k}, {b1,b2}.
InnerPoint solve_inner_half_duplex(const BandCoefs& b1, const BandCoefs& b2,
                                   double cap_bc, double cap_mac);
InnerPoint solve_inner_half_duplex_1band(const BandCoefs& b1,
                                         double cap_bc, double cap_mac);

// Value of the two-alpha-band edge crossing excluded from the production
// half-duplex solver; exposed for tests of the single-band optimality claim.
double half_duplex_two_band_edge_value(const BandCoefs& b1, const BandCoefs& b2,
                                       double cap_bc, double cap_mac);

}  // namespace relay
