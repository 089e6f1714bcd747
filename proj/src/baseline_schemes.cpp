#include "relay_rates/baseline_schemes.hpp"

#include <algorithm>
#include <cmath>

namespace relay {

double rate_cutset(const ChannelParams& p) {
    p.validate();
    double M = p.M;
    return std::min(p.rho * capacity(M * p.ps), capacity(M * M * p.pr));
}

double rate_df(const ChannelParams& p) {
    p.validate();
    double M = p.M;
    return std::min(p.rho * capacity(p.ps), capacity(M * M * p.pr));
}

double rate_af(const ChannelParams& p) {
    p.validate();
    double M = p.M;
    double gamma = std::min(p.rho, 1.0);
    return gamma * capacity(M * M * p.pr * p.ps / (M * p.pr + p.ps + 1.0));
}

namespace {

double softplus(double x) {
    if (x > 36.0) return x;
    if (x < -36.0) return std::exp(x);
    return std::log1p(std::exp(x));
}

// The implicit equation is solved on a piecewise parameter: linear in p on the
// lower half of the bracket, logarithmic in the pole gap (M*Ps + 1 - p) on the
// upper half. The gap near the pole can be far below p-space double resolution
// while the residual still matters, so the upper half must be resolved in log
// scale. The RHS is strictly increasing in p on the whole bracket, hence the
// log-domain mismatch r is increasing in the parameter and bisection applies.
struct CfEquation {
    double mps;        // M*Ps
    double pole;       // M*Ps + 1
    double m;          // relay count as double
    double log_lhs;    // log((1+M*Pr)^(1/rho)) = log1p(M*Pr)/rho
    double p_lo, p_half, gap_min, lambda;

    double p_of(double tau, double* gap_out) const {
        if (tau <= 1.0) {
            double p = p_lo + tau * (p_half - p_lo);
            *gap_out = pole - p;
            return p;
        }
        double gap = p_half * std::exp(-(tau - 1.0) * lambda);
        *gap_out = gap;
        return pole - gap;
    }

    // log(RHS(p)) - log(LHS); RHS - 1 = p*(M*Ps/gap)^M
    double log_mismatch(double p, double gap) const {
        double log_rhs_m1 = std::log(p) + m * (std::log(mps) - std::log(gap));
        return softplus(log_rhs_m1) - log_lhs;
    }
};

}  // namespace

CfSolution solve_cf_fixed_point(const ChannelParams& p) {
    p.validate();
    const double m = p.M;
    CfEquation eq;
    eq.mps = m * p.ps;
    eq.pole = eq.mps + 1.0;
    eq.m = m;
    eq.log_lhs = std::log1p(m * p.pr) / p.rho;
    eq.p_lo = 1e-12 * eq.pole;
    eq.p_half = 0.5 * eq.pole;
    eq.gap_min = 1e-12 * eq.pole;
    eq.lambda = std::log(eq.p_half / eq.gap_min);

    const double lhs = std::exp(eq.log_lhs);
    const double tol = 5e-11;  // |log mismatch| target; relative residual ~ |r|

    auto finish = [&](double tau, bool saturated) {
        double gap, pv;
        pv = eq.p_of(tau, &gap);
        double r = eq.log_mismatch(pv, gap);
        CfSolution sol;
        sol.p_cf = pv;
        sol.residual = std::abs(lhs * std::expm1(r));
        sol.saturated = saturated;
        return sol;
    };

    double gap;
    double p_edge = eq.p_of(2.0, &gap);
    if (eq.log_mismatch(p_edge, gap) < 0.0)
        return finish(2.0, true);  // MAC side exceeds the RHS over the whole bracket
    p_edge = eq.p_of(0.0, &gap);
    if (eq.log_mismatch(p_edge, gap) > 0.0)
        return finish(0.0, false);  // root at/below the lower edge (Pr ~ 0)

    double lo = 0.0, hi = 2.0;
    double tau = 1.0;
    for (int it = 0; it < 200; ++it) {
        tau = 0.5 * (lo + hi);
        double pv = eq.p_of(tau, &gap);
        double r = eq.log_mismatch(pv, gap);
        if (std::abs(r) <= tol) break;
        if (r > 0.0)
            hi = tau;
        else
            lo = tau;
    }
    return finish(tau, false);
}

double rate_cf(const ChannelParams& p, const CfSolution& sol) {
    return p.rho * capacity(sol.p_cf);
}

double rate_cf(const ChannelParams& p) {
    return rate_cf(p, solve_cf_fixed_point(p));
}

double rate_rf(const ChannelParams& p) {
    p.validate();
    if (p.ps <= 1.0)
        throw std::domain_error(
            "rate_rf: rematch-and-forward requires source power > 1 per dimension");
    double M = p.M;
    double psr = std::pow(p.ps, p.rho);
    double snr;
    if (p.rho >= 1.0) {
        // gamma = 1; dividing first keeps ps^rho overflow out of the SNR.
        double ratio = std::isinf(psr) ? 1.0 : (psr - 1.0) / (psr + M * p.pr);
        snr = M * M * p.pr * ratio;
    } else {
        double den = std::pow(psr + M * p.pr, p.rho) *
                     std::pow(psr + M * M * p.pr, 1.0 - p.rho);
        snr = M * M * p.pr * (psr - 1.0) / den;
    }
    return capacity(snr);
}

}  // namespace relay
