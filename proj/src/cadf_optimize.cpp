#include "relay_rates/cadf_optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "relay_rates/baseline_schemes.hpp"
#include "relay_rates/grid_scan.hpp"
#include "relay_rates/oracle.hpp"

namespace relay {

void OptimizerConfig::validate() const {
    if (coarse_points < 2) throw std::invalid_argument("OptimizerConfig: coarse_points must be >= 2");
    if (refine_points < 2) throw std::invalid_argument("OptimizerConfig: refine_points must be >= 2");
    if (refine_passes < 0) throw std::invalid_argument("OptimizerConfig: refine_passes must be >= 0");
    if (!(window_shrink > 0.0) || !(window_shrink < 1.0))
        throw std::invalid_argument("OptimizerConfig: window_shrink must be in (0,1)");
}

namespace {

constexpr double kTieEps = 1e-12;

// Combines the winners of the individual scans and the corner evaluations.
// Rates within kTieEps count as equal and resolve toward the smaller
// (alpha_total, beta1, ...) key, matching the report tie-break rule.
struct CandidateCombiner {
    SplitCandidate best;

    void offer(const SplitCandidate& c) {
        if (!c.valid) return;
        if (!best.valid) {
            best = c;
            return;
        }
        if (c.rate > best.rate + kTieEps) {
            best = c;
            return;
        }
        if (c.rate >= best.rate - kTieEps) {
            SplitCandidate tie = c;
            tie.rate = best.rate;  // compare keys only
            if (candidate_better(tie, best)) {
                best = c;
            }
        }
    }
};

struct CornerSplit {
    double fs, fr;
};

std::vector<CornerSplit> corner_splits(const ChannelParams& p, const std::vector<double>& rhos) {
    std::vector<CornerSplit> out;
    out.push_back({1.0, 1.0});  // pure analog forwarding
    out.push_back({0.0, 0.0});  // pure digital relaying
    if (p.ps > 1.0) {
        for (double rho : rhos) {
            if (rho <= 1.0) {
                double ps_af = std::pow(p.ps, rho) - 1.0;
                out.push_back({std::min(ps_af / p.ps, 1.0), 1.0});
            }
            if (rho >= 1.0) {
                ChannelParams q = p;
                q.rho = rho;
                out.push_back({1.0, relay_af_power_closed_form(q) / p.pr});
                out.push_back({1.0, relay_af_power_balanced(q) / p.pr});
            }
        }
    }
    return out;
}

SplitCandidate evaluate_corner(const ChannelParams& p, const CornerSplit& cs, BandMode mode,
                               double cap_bc, double cap_mac, bool two_bands) {
    BandPowerSplit s1 = split_from_fractions(p, cs.fs, cs.fr);
    BandCoefs b1 = band_coefs(p, s1);
    SplitCandidate c;
    c.valid = true;
    c.fs1 = cs.fs;
    c.fr1 = cs.fr;
    if (two_bands) {
        BandCoefs b2 = band_coefs(p, df_degenerate_split(p));
        c.fs2 = 0.0;
        c.fr2 = 0.0;
        c.inner = mode == BandMode::mismatch
                      ? solve_inner_mismatch(b1, b2, cap_bc, cap_mac, p.rho)
                      : solve_inner_half_duplex(b1, b2, cap_bc, cap_mac);
    } else {
        c.inner = mode == BandMode::mismatch
                      ? solve_inner_mismatch_1band(b1, cap_bc, cap_mac, p.rho)
                      : solve_inner_half_duplex_1band(b1, cap_bc, cap_mac);
    }
    c.rate = c.inner.rate;
    return c;
}

RateReport assemble_report(const ChannelParams& p, const SplitCandidate& w, BandMode mode) {
    CadfAllocation a;
    a.alpha = {w.inner.a1, w.inner.a2};
    a.beta1 = std::max(0.0, w.inner.beta1);
    a.beta2 = std::max(0.0, w.inner.beta2);
    a.splits[0] = split_from_fractions(p, w.fs1, w.fr1);
    a.splits[1] = split_from_fractions(p, w.fs2, w.fr2);
    if (a.alpha[1] > a.alpha[0]) {
        std::swap(a.alpha[0], a.alpha[1]);
        std::swap(a.splits[0], a.splits[1]);
    }
    for (int l = 0; l < 2; ++l)
        if (a.alpha[l] == 0.0) a.splits[l] = df_degenerate_split(p);
    return cadf_rate_successive(p, a, mode);
}

struct Window {
    double lo, hi;
};

Window window_around(double center, double span) {
    double lo = center - 0.5 * span;
    double hi = center + 0.5 * span;
    if (lo < 0.0) {
        hi = std::min(1.0, hi - lo);
        lo = 0.0;
    }
    if (hi > 1.0) {
        lo = std::max(0.0, lo - (hi - 1.0));
        hi = 1.0;
    }
    return {lo, hi};
}

// Refinement lattice for one fraction axis: a shrunken window in warped
// coordinates around the incumbent.
std::vector<double> refine_lattice(double power, double center_fraction, double span, int n) {
    double u = unwarp_fraction(center_fraction, power);
    Window w = window_around(u, span);
    return warped_lattice(power, w.lo, w.hi, n);
}

RateReport optimize_impl(const ChannelParams& p, const OptimizerConfig& cfg, BandMode mode,
                         const std::vector<double>& witness_rhos) {
    p.validate();
    cfg.validate();
    double m = p.M;
    double cap_bc = capacity(p.ps);
    double cap_mac = capacity(m * m * p.pr);

    auto scan = [&](const BandTable& t1, const BandTable* t2, bool symmetric) {
        ScanProblem prob;
        prob.band1 = &t1;
        prob.band2 = cfg.two_bands ? t2 : nullptr;
        prob.symmetric = symmetric && cfg.two_bands;
        prob.mode = mode;
        prob.cap_bc = cap_bc;
        prob.cap_mac = cap_mac;
        prob.rho = p.rho;
        return cfg.parallel ? scan_best_parallel(prob) : scan_best_serial(prob);
    };

    CandidateCombiner comb;
    if (cfg.corner_starts)
        for (const CornerSplit& cs : corner_splits(p, witness_rhos))
            comb.offer(evaluate_corner(p, cs, mode, cap_bc, cap_mac, cfg.two_bands));

    BandTable coarse = make_band_table(p, warped_lattice(p.ps, 0.0, 1.0, cfg.coarse_points),
                                       warped_lattice(p.pr, 0.0, 1.0, cfg.coarse_points));
    comb.offer(scan(coarse, &coarse, true));

    double span = 1.0;
    for (int pass = 0; pass < cfg.refine_passes; ++pass) {
        span *= cfg.window_shrink;
        const SplitCandidate& c = comb.best;
        BandTable t1 = make_band_table(p, refine_lattice(p.ps, c.fs1, span, cfg.refine_points),
                                       refine_lattice(p.pr, c.fr1, span, cfg.refine_points));
        if (cfg.two_bands) {
            BandTable t2 =
                make_band_table(p, refine_lattice(p.ps, c.fs2, span, cfg.refine_points),
                                refine_lattice(p.pr, c.fr2, span, cfg.refine_points));
            comb.offer(scan(t1, &t2, false));
        } else {
            comb.offer(scan(t1, nullptr, false));
        }
    }
    return assemble_report(p, comb.best, mode);
}

}  // namespace

RateReport optimize_cadf(const ChannelParams& p, const OptimizerConfig& cfg) {
    return optimize_impl(p, cfg, BandMode::mismatch, {p.rho});
}

RateReport optimize_cadf_half_duplex(const ChannelParams& p, const OptimizerConfig& cfg,
                                     const std::vector<double>& witness_rhos) {
    std::vector<double> rhos = witness_rhos;
    rhos.push_back(1.0);
    return optimize_impl(p, cfg, BandMode::half_duplex, rhos);
}

// ---------------------------------------------------------------------------
// RF-dominance witnesses
// ---------------------------------------------------------------------------

CadfAllocation rf_witness_allocation_low(const ChannelParams& p) {
    if (p.ps <= 1.0) throw std::domain_error("rf witness requires source power > 1");
    if (p.rho > 1.0) throw std::invalid_argument("rf_witness_allocation_low needs rho <= 1");
    double ps_af = std::pow(p.ps, p.rho) - 1.0;
    CadfAllocation a;
    a.alpha = {p.rho, 0.0};
    a.beta1 = 0.0;
    a.beta2 = 1.0 - p.rho;
    a.splits[0] = {ps_af, p.ps - ps_af, p.pr, 0.0};
    a.splits[1] = df_degenerate_split(p);
    return a;
}

double relay_af_power_closed_form(const ChannelParams& p) {
    double m = p.M;
    double psr = std::pow(p.ps, p.rho);
    if (!(psr < m * m * p.ps * p.pr)) return 0.0;  // BC band swamps the relay budget
    double m_pp = (m * m * p.ps * p.pr - psr) /
                  (m * psr + std::pow(p.ps, p.rho - 1.0) + m * p.ps + m);
    double pr_af = (m_pp / m) * (p.ps + 1.0) / p.ps;  // include the forwarded-noise power
    return std::min(std::max(pr_af, 0.0), p.pr);
}

double relay_af_power_balanced(const ChannelParams& p) {
    double m = p.M;
    double k = std::pow(1.0 + p.ps, p.rho - 1.0) - 1.0;
    if (!(k < m * m * p.pr)) return 0.0;  // capacity case: the whole budget goes digital
    double m_pp = (m * m * p.pr - k) * p.ps / (k * (m * p.ps + 1.0) + m * (p.ps + 1.0));
    double pr_af = (m_pp / m) * (p.ps + 1.0) / p.ps;
    return std::min(std::max(pr_af, 0.0), p.pr);
}

CadfAllocation rf_witness_allocation_high(const ChannelParams& p, bool balanced) {
    if (p.ps <= 1.0) throw std::domain_error("rf witness requires source power > 1");
    if (p.rho < 1.0) throw std::invalid_argument("rf_witness_allocation_high needs rho >= 1");
    double pr_af = balanced ? relay_af_power_balanced(p) : relay_af_power_closed_form(p);
    CadfAllocation a;
    a.alpha = {1.0, 0.0};
    a.beta1 = p.rho - 1.0;
    a.beta2 = 0.0;
    a.splits[0] = {p.ps, 0.0, pr_af, p.pr - pr_af};
    a.splits[1] = df_degenerate_split(p);
    return a;
}

RfDominanceWitness check_rf_dominance(const ChannelParams& p, const OptimizerConfig& cfg) {
    p.validate();
    if (p.ps <= 1.0)
        throw std::domain_error("check_rf_dominance requires source power > 1 per dimension");

    const double tol = 1e-9;
    double m = p.M;
    RfDominanceWitness w;
    w.snr_af = w.snr_kf = w.middle = std::nan("");
    w.m_pr_af_closed = w.m_pr_af_bound = std::nan("");
    w.rf_rate = rate_rf(p);
    w.cutset = rate_cutset(p);

    double margin = std::numeric_limits<double>::infinity();
    auto take = [&](double slack) { margin = std::min(margin, slack); };

    if (p.rho <= 1.0) {
        CadfAllocation a = rf_witness_allocation_low(p);
        w.witness_rate = cadf_rate_successive(p, a).rate;
        double psr = std::pow(p.ps, p.rho);
        w.snr_af = m * m * p.pr * (psr - 1.0) / (m * p.pr + psr);
        w.snr_kf = m * m * p.pr * (psr - 1.0) / (psr + m * m * p.pr);
        w.middle = p.rho * capacity(w.snr_af) + (1.0 - p.rho) * capacity(w.snr_kf);
        take(w.witness_rate - w.middle);
        take(w.middle - w.rf_rate);
    } else {
        w.capacity_case = (p.rho - 1.0) * capacity(p.ps) > capacity(m * m * p.pr);
        if (w.capacity_case) {
            CadfAllocation a;  // pure digital relaying meets the MAC cut exactly
            a.beta1 = p.rho;
            a.beta2 = 1.0;
            a.splits = {df_degenerate_split(p), df_degenerate_split(p)};
            w.witness_rate = cadf_rate_successive(p, a).rate;
            take(w.witness_rate - w.rf_rate);
        } else {
            double r_closed = cadf_rate_successive(p, rf_witness_allocation_high(p, false)).rate;
            double r_balanced = cadf_rate_successive(p, rf_witness_allocation_high(p, true)).rate;
            w.witness_rate = std::max(r_closed, r_balanced);
            double pr_af = relay_af_power_closed_form(p);
            w.m_pr_af_closed = m * pr_af * p.ps / (p.ps + 1.0);  // back to signal-only power
            w.m_pr_af_bound = m * p.pr / std::pow(p.ps, p.rho - 1.0);
            if (w.m_pr_af_closed > 0.0) take(w.m_pr_af_bound - w.m_pr_af_closed);
            take(w.witness_rate - w.rf_rate);
        }
    }

    w.optimized = optimize_cadf(p, cfg).rate;
    take(w.optimized - w.witness_rate);
    take(w.optimized - w.rf_rate);
    if (w.capacity_case) take(tol - std::abs(w.optimized - capacity(m * m * p.pr)));

    w.chain_margin = margin;
    w.chain_ok = margin >= -tol;
    return w;
}

// ---------------------------------------------------------------------------
// Inner-structure verification
// ---------------------------------------------------------------------------

InnerStructureWitness check_inner_structure(const ChannelParams& p, const BandPowerSplit& s1,
                                            const BandPowerSplit& s2, int grid_n) {
    p.validate();
    double m = p.M;
    BandCoefs b1 = band_coefs(p, s1);
    BandCoefs b2 = band_coefs(p, s2);
    double cap_bc = capacity(p.ps);
    double cap_mac = capacity(m * m * p.pr);

    InnerStructureWitness w;
    w.vertex_opt = solve_inner_mismatch(b1, b2, cap_bc, cap_mac, p.rho);
    w.grid_opt = brute_force_inner(p, s1, s2, grid_n);

    double amax = std::min(1.0, p.rho);
    double h = amax / (grid_n - 1);
    double lip = std::abs(b1.bc - cap_bc) + std::abs(b2.bc - cap_bc) +
                 std::abs(b1.mac - cap_mac) + std::abs(b2.mac - cap_mac);
    w.agree_tol = 1e-6 + 2.0 * h * lip;

    const double zero_tol = 1e-12;
    const InnerPoint& v = w.vertex_opt;
    double free_beta = p.rho <= 1.0 ? v.beta1 : v.beta2;
    w.free_support = (v.a1 > zero_tol) + (v.a2 > zero_tol) + (free_beta > zero_tol);
    w.beta2_positive = p.rho < 1.0 ? v.beta2 > zero_tol : true;

    bool agree = std::abs(w.vertex_opt.rate - w.grid_opt) <= w.agree_tol &&
                 w.vertex_opt.rate >= w.grid_opt - 1e-9;
    w.ok = agree && w.free_support <= 2 && w.beta2_positive;
    return w;
}

}  // namespace relay
