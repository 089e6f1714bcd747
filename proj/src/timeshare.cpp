#include "relay_rates/timeshare.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "relay_rates/baseline_schemes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relay {

void TimeShareConfig::validate() const {
    if (t_steps < 2) throw std::invalid_argument("TimeShareConfig: t_steps must be >= 2");
    if (power_points < 2) throw std::invalid_argument("TimeShareConfig: power_points must be >= 2");
    if (t_refine_points < 2)
        throw std::invalid_argument("TimeShareConfig: t_refine_points must be >= 2");
    cadf_full.validate();
    cadf_quick.validate();
}

namespace {

struct PlanCandidate {
    double rate = -1.0;
    TimeSharePlan plan;
    bool valid = false;
};

bool plan_better(const PlanCandidate& c, const PlanCandidate& best) {
    if (!best.valid) return c.valid;
    if (!c.valid) return false;
    if (c.rate != best.rate) return c.rate > best.rate;
    if (c.plan.t1 != best.plan.t1) return c.plan.t1 < best.plan.t1;
    if (c.plan.t2 != best.plan.t2) return c.plan.t2 < best.plan.t2;
    if (c.plan.ps_a != best.plan.ps_a) return c.plan.ps_a < best.plan.ps_a;
    return c.plan.pr_a < best.plan.pr_a;
}

Scheme phase_a_scheme(Scheme variant) {
    switch (variant) {
        case Scheme::CADF_DF: return Scheme::CADF;
        case Scheme::RF_DF:   return Scheme::RF;
        case Scheme::AF_DF:   return Scheme::AF;
        default:
            throw std::invalid_argument("optimize_timeshare: variant must be one of cadf_df, rf_df, af_df");
    }
}

struct PlanEvaluator {
    const ChannelParams* p;
    Scheme a_scheme;
    const OptimizerConfig* quick;

    PlanCandidate eval(double t1, double t2, double gs, double gr,
                       const OptimizerConfig* a_cfg) const {
        PlanCandidate c;
        TimeSharePlan& pl = c.plan;
        pl.t1 = t1;
        pl.t2 = t2;
        pl.ps_a = t1 > 0.0 ? gs * p->ps / t1 : 0.0;
        pl.ps_b = t1 < 1.0 ? (1.0 - gs) * p->ps / (1.0 - t1) : 0.0;
        pl.pr_a = t2 > 0.0 ? gr * p->pr / t2 : 0.0;
        pl.pr_b = t2 < 1.0 ? (1.0 - gr) * p->pr / (1.0 - t2) : 0.0;

        double m = p->M;
        double ra = 0.0;
        bool a_active = t1 > 0.0 && t2 > 0.0 && pl.ps_a > 0.0 && pl.pr_a > 0.0;
        if (a_active) {
            ChannelParams q = *p;
            q.ps = pl.ps_a;
            q.pr = pl.pr_a;
            q.rho = t1 / t2;
            switch (a_scheme) {
                case Scheme::CADF:
                    ra = t2 * optimize_cadf(q, a_cfg ? *a_cfg : *quick).rate;
                    break;
                case Scheme::RF:
                    if (q.ps <= 1.0) return c;  // infeasible plan, skipped
                    ra = t2 * rate_rf(q);
                    break;
                case Scheme::AF:
                    ra = t2 * rate_af(q);
                    break;
                default:
                    break;
            }
        }
        double bc_b = (t1 < 1.0 && pl.ps_b > 0.0) ? (1.0 - t1) * capacity(pl.ps_b) : 0.0;
        double mac_b = (t2 < 1.0 && pl.pr_b > 0.0) ? (1.0 - t2) * capacity(m * m * pl.pr_b) : 0.0;
        c.rate = ra + std::min(bc_b, mac_b);
        c.valid = true;
        return c;
    }
};

std::vector<double> t_values(int steps) {
    std::vector<double> v(steps + 1);
    for (int i = 0; i <= steps; ++i) v[i] = static_cast<double>(i) / steps;
    return v;
}

std::vector<double> g_values_for(double t, int points) {
    if (t <= 0.0) return {0.0};
    if (t >= 1.0) return {1.0};
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) v[i] = static_cast<double>(i) / (points - 1);
    return v;
}

PlanCandidate scan_t_cell(const PlanEvaluator& ev, double t1, double t2, int power_points) {
    PlanCandidate best;
    for (double gs : g_values_for(t1, power_points))
        for (double gr : g_values_for(t2, power_points)) {
            PlanCandidate c = ev.eval(t1, t2, gs, gr, nullptr);
            if (plan_better(c, best)) best = c;
        }
    return best;
}

PlanCandidate scan_t_grid(const PlanEvaluator& ev, const std::vector<double>& t1s,
                          const std::vector<double>& t2s, int power_points, bool parallel) {
    const int n1 = static_cast<int>(t1s.size());
    const int n2 = static_cast<int>(t2s.size());
    const int total = n1 * n2;
    PlanCandidate best;
#ifdef _OPENMP
    if (parallel) {
        int nthreads = omp_get_max_threads();
        std::vector<PlanCandidate> locals(nthreads);
#pragma omp parallel num_threads(nthreads)
        {
            int tid = omp_get_thread_num();
            PlanCandidate local;
#pragma omp for schedule(static, 1)
            for (int idx = 0; idx < total; ++idx) {
                PlanCandidate c = scan_t_cell(ev, t1s[idx / n2], t2s[idx % n2], power_points);
                if (plan_better(c, local)) local = c;
            }
            locals[tid] = local;
        }
        for (const auto& c : locals)
            if (plan_better(c, best)) best = c;
        return best;
    }
#endif
    (void)parallel;
    for (int idx = 0; idx < total; ++idx) {
        PlanCandidate c = scan_t_cell(ev, t1s[idx / n2], t2s[idx % n2], power_points);
        if (plan_better(c, best)) best = c;
    }
    return best;
}

std::vector<double> window_values(double center, double span, int points) {
    double lo = std::max(0.0, center - 0.5 * span);
    double hi = std::min(1.0, center + 0.5 * span);
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i)
        v[i] = points == 1 ? center : lo + (hi - lo) * i / (points - 1);
    return v;
}

}  // namespace

RateReport optimize_timeshare(Scheme variant, const ChannelParams& p, const TimeShareConfig& cfg) {
    p.validate();
    cfg.validate();
    if (std::abs(p.rho - 1.0) > 1e-12)
        throw std::invalid_argument("optimize_timeshare: equal per-hop bandwidth required (rho = 1)");

    PlanEvaluator ev{&p, phase_a_scheme(variant), &cfg.cadf_quick};

    std::vector<double> ts = t_values(cfg.t_steps);
    PlanCandidate best = scan_t_grid(ev, ts, ts, cfg.power_points, cfg.parallel);

    // One refinement pass around the incumbent (t1, t2).
    double span = 2.0 / cfg.t_steps;
    PlanCandidate refined = scan_t_grid(ev, window_values(best.plan.t1, span, cfg.t_refine_points),
                                        window_values(best.plan.t2, span, cfg.t_refine_points),
                                        cfg.power_points, cfg.parallel);
    if (plan_better(refined, best)) best = refined;

    // Endpoint anchors at full solver quality: the composite search space
    // contains the pure schemes, and these evaluations pin that down.
    PlanCandidate pure_a = ev.eval(1.0, 1.0, 1.0, 1.0, &cfg.cadf_full);
    if (plan_better(pure_a, best)) best = pure_a;
    PlanCandidate pure_df = ev.eval(0.0, 0.0, 0.0, 0.0, &cfg.cadf_full);
    if (plan_better(pure_df, best)) best = pure_df;

    RateReport r;
    r.scheme = variant;
    r.rate = best.rate;
    r.units = RateUnits::per_total_dim;
    r.plan = best.plan;
    return r;
}

}  // namespace relay
