#include "relay_rates/cadf.hpp"

#include <algorithm>
#include <cmath>

namespace relay {

BandPowerSplit af_degenerate_split(const ChannelParams& p) {
    return {p.ps, 0.0, p.pr, 0.0};
}

BandPowerSplit df_degenerate_split(const ChannelParams& p) {
    return {0.0, p.ps, 0.0, p.pr};
}

namespace {

std::optional<std::string> split_violation(const ChannelParams& p, const BandPowerSplit& s,
                                           int band) {
    auto bad = [&](const char* what) {
        return std::string(what) + " in band " + std::to_string(band + 1);
    };
    double ptol_s = 1e-12 * p.ps, ptol_r = 1e-12 * p.pr;
    if (s.ps_af < -ptol_s || s.ps_df < -ptol_s || s.ps_af > p.ps + ptol_s || s.ps_df > p.ps + ptol_s)
        return bad("source branch power outside [0, Ps]");
    if (s.pr_af < -ptol_r || s.pr_df < -ptol_r || s.pr_af > p.pr + ptol_r || s.pr_df > p.pr + ptol_r)
        return bad("relay branch power outside [0, Pr]");
    if (std::abs(s.ps_af + s.ps_df - p.ps) > ptol_s)
        return bad("source power split violated: ps_af + ps_df != Ps");
    if (std::abs(s.pr_af + s.pr_df - p.pr) > ptol_r)
        return bad("relay power split violated: pr_af + pr_df != Pr");
    return std::nullopt;
}

}  // namespace

std::optional<std::string> allocation_violation(const ChannelParams& p, const CadfAllocation& a,
                                                BandMode mode, double tol) {
    if (a.alpha[0] < -tol || a.alpha[1] < -tol || a.beta1 < -tol || a.beta2 < -tol)
        return "negative band fraction";
    double A = a.alpha[0] + a.alpha[1];
    if (mode == BandMode::mismatch) {
        if (std::abs(A + a.beta1 - p.rho) > tol)
            return "BC bandwidth budget violated: alpha1 + alpha2 + beta1 != rho";
        if (std::abs(A + a.beta2 - 1.0) > tol)
            return "MAC bandwidth budget violated: alpha1 + alpha2 + beta2 != 1";
    } else {
        if (std::abs(2.0 * A + a.beta1 + a.beta2 - 1.0) > tol)
            return "half-duplex bandwidth budget violated: 2*(alpha1+alpha2) + beta1 + beta2 != 1";
    }
    for (int l = 0; l < 2; ++l)
        if (auto v = split_violation(p, a.splits[l], l)) return v;
    return std::nullopt;
}

BandSnrs band_snrs(const ChannelParams& p, const BandPowerSplit& s) {
    double M = p.M;
    double den = M * s.pr_af + s.ps_af + 1.0;
    BandSnrs r;
    r.af = M * M * s.pr_af * s.ps_af / den;
    r.bc_df = s.ps_df / (s.ps_af + 1.0);
    r.mac_df = M * M * s.pr_df * (s.ps_af + 1.0) / (M * M * s.pr_af * s.ps_af + den);
    double pr_total = s.pr_af + s.pr_df;
    r.sum = M * M * (pr_total * s.ps_af + s.pr_df) / den;
    return r;
}

BandCoefs band_coefs(const ChannelParams& p, const BandPowerSplit& s) {
    BandSnrs x = band_snrs(p, s);
    return {capacity(x.af) + capacity(x.bc_df), capacity(x.sum)};
}

namespace {

struct CutTerms {
    double common = 0.0;      // alpha-weighted analog terms
    double bc_digital = 0.0;  // alpha-weighted BC digital terms + beta1*C(Ps)
    double mac_succ = 0.0;    // alpha-weighted successive digital terms + beta2*C(M^2 Pr)
    double mac_sum = 0.0;     // alpha-weighted joint sum-rate terms + beta2*C(M^2 Pr)
};

CutTerms cut_terms(const ChannelParams& p, const CadfAllocation& a) {
    double M = p.M;
    CutTerms t;
    for (int l = 0; l < 2; ++l) {
        BandSnrs x = band_snrs(p, a.splits[l]);
        double al = a.alpha[l];
        t.common += al * capacity(x.af);
        t.bc_digital += al * capacity(x.bc_df);
        t.mac_succ += al * capacity(x.mac_df);
        t.mac_sum += al * capacity(x.sum);
    }
    t.bc_digital += a.beta1 * capacity(p.ps);
    double b2c = a.beta2 * capacity(M * M * p.pr);
    t.mac_succ += b2c;
    t.mac_sum += b2c;
    return t;
}

RateReport make_cadf_report(const CadfAllocation& a, BandMode mode,
                            double bc_cut, double mac_cut) {
    RateReport r;
    r.scheme = Scheme::CADF;
    r.rate = std::min(bc_cut, mac_cut);
    r.units = mode == BandMode::mismatch ? RateUnits::per_mac_dim : RateUnits::per_total_dim;
    r.bc_cut = bc_cut;
    r.mac_cut = mac_cut;
    r.allocation = a;
    return r;
}

}  // namespace

RateReport cadf_rate_successive(const ChannelParams& p, const CadfAllocation& a, BandMode mode) {
    p.validate();
    if (auto v = allocation_violation(p, a, mode)) throw std::invalid_argument("infeasible allocation: " + *v);
    CutTerms t = cut_terms(p, a);
    return make_cadf_report(a, mode, t.common + t.bc_digital, t.common + t.mac_succ);
}

RateReport cadf_rate_sumrate(const ChannelParams& p, const CadfAllocation& a, BandMode mode) {
    p.validate();
    if (auto v = allocation_violation(p, a, mode)) throw std::invalid_argument("infeasible allocation: " + *v);
    CutTerms t = cut_terms(p, a);
    return make_cadf_report(a, mode, t.common + t.bc_digital, t.mac_sum);
}

MacCorner mac_corner(const ChannelParams& p, double l_frac, const BandPowerSplit& s) {
    p.validate();
    BandSnrs x = band_snrs(p, s);
    MacCorner c;
    c.r_af = l_frac * capacity(x.af);
    c.sum = l_frac * capacity(x.sum);
    c.r_df = c.sum - c.r_af;
    // The standalone digital bound is implied by the sum-rate corner; a breach
    // here means the rate algebra itself is wrong.
    double M = p.M;
    double standalone = l_frac * capacity(M * M * s.pr_df * (s.ps_af + 1.0) /
                                          (M * s.pr_af + s.ps_af + 1.0));
    if (c.r_df > standalone + 1e-9 * (1.0 + standalone))
        throw std::logic_error("mac_corner: digital rate exceeds its standalone bound");
    return c;
}

SuccessiveWitness successive_decoding_check(const ChannelParams& p, const BandPowerSplit& s,
                                            double rel_tol) {
    p.validate();
    BandSnrs x = band_snrs(p, s);
    SuccessiveWitness w;
    w.snr_af = x.af;
    w.snr_df_succ = x.mac_df;
    w.snr_sum = x.sum;
    double lhs = (1.0 + x.af) * (1.0 + x.mac_df);
    double rhs = 1.0 + x.sum;
    double prod_dev = std::abs(lhs - rhs) / rhs;
    double cap_dev = std::abs(capacity(x.af) + capacity(x.mac_df) - capacity(x.sum)) /
                     std::max(1.0, capacity(x.sum));
    w.rel_error = std::max(prod_dev, cap_dev);
    w.ok = w.rel_error <= rel_tol;
    return w;
}

// ---------------------------------------------------------------------------
// Inner solvers
// ---------------------------------------------------------------------------

namespace {

constexpr double kTieEps = 1e-12;

struct InnerAccum {
    InnerPoint best;
    bool any = false;

    static bool key_less(const InnerPoint& x, const InnerPoint& y) {
        double ax = x.a1 + x.a2, ay = y.a1 + y.a2;
        if (ax != ay) return ax < ay;
        if (x.beta1 != y.beta1) return x.beta1 < y.beta1;
        return x.a2 < y.a2;
    }

    void offer(const InnerPoint& c) {
        if (!any) {
            best = c;
            any = true;
            return;
        }
        if (c.rate > best.rate + kTieEps) {
            best = c;
        } else if (c.rate >= best.rate - kTieEps && key_less(c, best)) {
            best = c;
        }
    }
};

double clamp01(double x, double hi) { return std::min(std::max(x, 0.0), hi); }

}  // namespace

InnerPoint solve_inner_mismatch(const BandCoefs& b1, const BandCoefs& b2,
                                double cap_bc, double cap_mac, double rho) {
    double amax = std::min(1.0, rho);
    double gb1 = b1.bc - cap_bc, gm1 = b1.mac - cap_mac;
    double gb2 = b2.bc - cap_bc, gm2 = b2.mac - cap_mac;
    double bc0 = cap_bc * rho, mac0 = cap_mac;

    InnerAccum acc;
    auto offer = [&](double a1, double a2) {
        InnerPoint c;
        c.a1 = a1;
        c.a2 = a2;
        c.beta1 = rho - a1 - a2;
        c.beta2 = 1.0 - a1 - a2;
        c.bc = bc0 + gb1 * a1 + gb2 * a2;
        c.mac = mac0 + gm1 * a1 + gm2 * a2;
        c.rate = std::min(c.bc, c.mac);
        acc.offer(c);
    };

    offer(0.0, 0.0);
    offer(amax, 0.0);
    offer(0.0, amax);

    // Cut-equalization points on the three edges.
    double den1 = gb1 - gm1;
    if (den1 != 0.0) {
        double a1 = (mac0 - bc0) / den1;
        if (a1 > 0.0 && a1 < amax) offer(clamp01(a1, amax), 0.0);
    }
    double den2 = gb2 - gm2;
    if (den2 != 0.0) {
        double a2 = (mac0 - bc0) / den2;
        if (a2 > 0.0 && a2 < amax) offer(0.0, clamp01(a2, amax));
    }
    // Hypotenuse a1 + a2 = amax, parameterized by a1 = t.
    double c0 = (bc0 + gb2 * amax) - (mac0 + gm2 * amax);
    double slope = (gb1 - gb2) - (gm1 - gm2);
    if (slope != 0.0) {
        double t = -c0 / slope;
        if (t > 0.0 && t < amax) {
            t = clamp01(t, amax);
            offer(t, amax - t);
        }
    }
    return acc.best;
}

InnerPoint solve_inner_mismatch_1band(const BandCoefs& b1, double cap_bc, double cap_mac,
                                      double rho) {
    double amax = std::min(1.0, rho);
    double gb1 = b1.bc - cap_bc, gm1 = b1.mac - cap_mac;
    double bc0 = cap_bc * rho, mac0 = cap_mac;

    InnerAccum acc;
    auto offer = [&](double a1) {
        InnerPoint c;
        c.a1 = a1;
        c.beta1 = rho - a1;
        c.beta2 = 1.0 - a1;
        c.bc = bc0 + gb1 * a1;
        c.mac = mac0 + gm1 * a1;
        c.rate = std::min(c.bc, c.mac);
        acc.offer(c);
    };
    offer(0.0);
    offer(amax);
    double den = gb1 - gm1;
    if (den != 0.0) {
        double a1 = (mac0 - bc0) / den;
        if (a1 > 0.0 && a1 < amax) offer(clamp01(a1, amax));
    }
    return acc.best;
}

InnerPoint solve_inner_half_duplex(const BandCoefs& b1, const BandCoefs& b2,
                                   double cap_bc, double cap_mac) {
    InnerAccum acc;
    auto offer = [&](double a1, double a2, double be1, double be2) {
        InnerPoint c;
        c.a1 = a1;
        c.a2 = a2;
        c.beta1 = be1;
        c.beta2 = be2;
        c.bc = b1.bc * a1 + b2.bc * a2 + cap_bc * be1;
        c.mac = b1.mac * a1 + b2.mac * a2 + cap_mac * be2;
        c.rate = std::min(c.bc, c.mac);
        acc.offer(c);
    };

    const BandCoefs* bands[2] = {&b1, &b2};
    for (int i = 0; i < 2; ++i) {
        const BandCoefs& b = *bands[i];
        auto offer_a = [&](double t, double be1, double be2) {
            if (i == 0)
                offer(t, 0.0, be1, be2);
            else
                offer(0.0, t, be1, be2);
        };
        offer_a(0.5, 0.0, 0.0);  // single active band
        // band + BC-only DF band: a = t, beta1 = 1 - 2t
        double den = b.mac - b.bc + 2.0 * cap_bc;
        if (den != 0.0) {
            double t = cap_bc / den;
            if (t > 0.0 && t < 0.5) offer_a(t, 1.0 - 2.0 * t, 0.0);
        }
        // band + MAC-only DF band: a = t, beta2 = 1 - 2t
        den = b.bc - b.mac + 2.0 * cap_mac;
        if (den != 0.0) {
            double t = cap_mac / den;
            if (t > 0.0 && t < 0.5) offer_a(t, 0.0, 1.0 - 2.0 * t);
        }
    }
    // Pure digital relaying: beta1 = t, beta2 = 1 - t.
    offer(0.0, 0.0, 1.0, 0.0);
    offer(0.0, 0.0, 0.0, 1.0);
    double den = cap_bc + cap_mac;
    if (den > 0.0) {
        double t = cap_mac / den;
        if (t > 0.0 && t < 1.0) offer(0.0, 0.0, t, 1.0 - t);
    }
    return acc.best;
}

InnerPoint solve_inner_half_duplex_1band(const BandCoefs& b1, double cap_bc, double cap_mac) {
    return solve_inner_half_duplex(b1, b1, cap_bc, cap_mac);
}

double half_duplex_two_band_edge_value(const BandCoefs& b1, const BandCoefs& b2,
                                       double cap_bc, double cap_mac) {
    (void)cap_bc;
    (void)cap_mac;
    // Edge a1 = t, a2 = 1/2 - t, betas zero.
    auto value = [&](double t) {
        double bc = b1.bc * t + b2.bc * (0.5 - t);
        double mac = b1.mac * t + b2.mac * (0.5 - t);
        return std::min(bc, mac);
    };
    double best = std::max(value(0.0), value(0.5));
    double slope = (b1.bc - b2.bc) - (b1.mac - b2.mac);
    if (slope != 0.0) {
        double c0 = 0.5 * (b2.bc - b2.mac);
        double t = -c0 / slope;
        if (t > 0.0 && t < 0.5) best = std::max(best, value(t));
    }
    return best;
}

}  // namespace relay
