#pragma once

#include <vector>

#include "relay_rates/cadf.hpp"

namespace relay {

struct OptimizerConfig {
    int coarse_points = 33;      // grid points per power-split fraction, full-range pass
    int refine_points = 17;      // points per fraction inside refinement windows
    int refine_passes = 3;       // window shrinks by window_shrink each pass
    double window_shrink = 0.2;
    bool two_bands = true;       // false restricts the search to one shared band
    bool corner_starts = true;   // seed from the scheme-degenerate corner splits
    bool parallel = true;        // OpenMP scan kernel vs the serial reference

    void validate() const;  // throws std::invalid_argument
};

// Best CADF rate under the bandwidth-mismatch constraints.
RateReport optimize_cadf(const ChannelParams& p, const OptimizerConfig& cfg = {});

// Best CADF rate under the shared-total-bandwidth (half-duplex) constraint.
// witness_rhos lists additional effective expansion factors whose
// RF-dominance witness splits are seeded into the outer search.
RateReport optimize_cadf_half_duplex(const ChannelParams& p, const OptimizerConfig& cfg = {},
                                     const std::vector<double>& witness_rhos = {});

// ---------------------------------------------------------------------------
// RF-dominance proof machinery (the constructive allocations showing CADF
// reaches at least the rematch-and-forward rate).
// ---------------------------------------------------------------------------

// rho <= 1 construction: a single shared band of width rho carries the whole
// analog budget plus a superimposed digital layer sized so the analog branch
// sees effective source power ps^rho - 1; the MAC-only digital band takes the
// remaining 1 - rho.
CadfAllocation rf_witness_allocation_low(const ChannelParams& p);  // requires ps > 1, rho <= 1

// rho >= 1 construction: full-width shared band with all source power analog;
// the relay splits its power so the (rho-1)-wide BC-only digital band is
// matched by the digital layer on the MAC side. The closed-form variant uses
// the printed formula for the relay analog signal power; the balanced variant
// equalizes the two cuts exactly (they coincide at rho = 2).
double relay_af_power_closed_form(const ChannelParams& p);  // pr_af, clamped to [0, pr]
double relay_af_power_balanced(const ChannelParams& p);
CadfAllocation rf_witness_allocation_high(const ChannelParams& p, bool balanced);

struct RfDominanceWitness {
    bool capacity_case = false;   // (rho-1)*C(ps) > C(M^2 pr): DF meets the cut-set bound
    double witness_rate = 0.0;    // best proof allocation, honest min of its two cuts
    double rf_rate = 0.0;
    double optimized = 0.0;
    double cutset = 0.0;
    // rho <= 1 chain pieces (NaN otherwise)
    double snr_af = 0.0, snr_kf = 0.0, middle = 0.0;
    // rho >= 1 pieces (NaN otherwise)
    double m_pr_af_closed = 0.0;  // M * (relay analog signal power), printed closed form
    double m_pr_af_bound = 0.0;   // M*pr / ps^(rho-1)
    double chain_margin = 0.0;    // min slack over the applicable chain inequalities
    bool chain_ok = false;
};

// Evaluates the proof-witness chain at p (requires ps > 1) and checks the
// optimizer result dominates the witness.
RfDominanceWitness check_rf_dominance(const ChannelParams& p, const OptimizerConfig& cfg = {});

// ---------------------------------------------------------------------------
// Inner-solution structure verification: vertex enumeration against a dense
// grid, support-size bound, and beta2 > 0 for rho < 1.
// ---------------------------------------------------------------------------

struct InnerStructureWitness {
    InnerPoint vertex_opt;
    double grid_opt = 0.0;
    double agree_tol = 0.0;     // 1e-6 + Lipschitz * grid-resolution bound
    int free_support = 0;       // nonzero count among {a1, a2, non-forced beta}
    bool beta2_positive = true; // for rho < 1
    bool ok = false;
};

InnerStructureWitness check_inner_structure(const ChannelParams& p,
                                            const BandPowerSplit& s1,
                                            const BandPowerSplit& s2,
                                            int grid_n = 513);

}  // namespace relay
