#include "relay_rates/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "relay_rates/baseline_schemes.hpp"
#include "relay_rates/half_duplex.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relay {

const char* to_string(SweepMode m) {
    switch (m) {
        case SweepMode::mismatch:    return "mismatch";
        case SweepMode::half_duplex: return "half_duplex";
        case SweepMode::timeshare:   return "timeshare";
    }
    return "?";
}

SweepMode sweep_mode_from_string(const std::string& name) {
    for (SweepMode m : {SweepMode::mismatch, SweepMode::half_duplex, SweepMode::timeshare})
        if (name == to_string(m)) return m;
    throw std::invalid_argument("unknown sweep mode '" + name + "'");
}

const char* to_string(FigureId f) {
    switch (f) {
        case FigureId::fig5: return "fig5";
        case FigureId::fig6: return "fig6";
        case FigureId::fig7: return "fig7";
        case FigureId::fig8: return "fig8";
        case FigureId::fig9: return "fig9";
    }
    return "?";
}

FigureId figure_from_string(const std::string& name) {
    for (FigureId f : {FigureId::fig5, FigureId::fig6, FigureId::fig7, FigureId::fig8,
                       FigureId::fig9})
        if (name == to_string(f)) return f;
    throw std::invalid_argument("unknown figure '" + name + "'");
}

void SweepSpec::validate() const {
    if (schemes.empty()) throw std::invalid_argument("SweepSpec: schemes must be nonempty");
    if (m_values.empty()) throw std::invalid_argument("SweepSpec: M values must be nonempty");
    for (int m : m_values)
        if (m < 1) throw std::invalid_argument("SweepSpec: M values must be >= 1");
    if (!(ps > 0.0)) throw std::invalid_argument("SweepSpec: source power must be positive");
    bool total = pr_total > 0.0, per = pr_per_relay > 0.0;
    if (total == per)
        throw std::invalid_argument("SweepSpec: set exactly one of total or per-relay power");
    if (mode != SweepMode::timeshare && !(rho > 0.0))
        throw std::invalid_argument("SweepSpec: rho must be positive");
}

RateReport point_report(Scheme scheme, const ChannelParams& p, SweepMode mode,
                        const EngineConfig& ec) {
    if (mode == SweepMode::half_duplex) {
        if (scheme == Scheme::CADF_DF || scheme == Scheme::RF_DF || scheme == Scheme::AF_DF)
            throw std::invalid_argument("half-duplex mode has no time-sharing composites");
        return hd_rate(scheme, p, ec.opt);
    }
    if (mode == SweepMode::timeshare) {
        switch (scheme) {
            case Scheme::CADF_DF:
            case Scheme::RF_DF:
            case Scheme::AF_DF:
                return optimize_timeshare(scheme, p, ec.ts);
            default: {
                // Pure-scheme references at rho = 1, tagged with the block
                // convention used by the composites (numerically identical).
                RateReport r = point_report(scheme, p, SweepMode::mismatch, ec);
                r.units = RateUnits::per_total_dim;
                return r;
            }
        }
    }

    RateReport r;
    r.scheme = scheme;
    r.units = RateUnits::per_mac_dim;
    double m = p.M;
    switch (scheme) {
        case Scheme::CUTSET:
            r.bc_cut = p.rho * capacity(m * p.ps);
            r.mac_cut = capacity(m * m * p.pr);
            r.rate = std::min(r.bc_cut, r.mac_cut);
            break;
        case Scheme::DF:
            r.bc_cut = p.rho * capacity(p.ps);
            r.mac_cut = capacity(m * m * p.pr);
            r.rate = std::min(r.bc_cut, r.mac_cut);
            break;
        case Scheme::AF:
            r.rate = r.bc_cut = r.mac_cut = rate_af(p);
            break;
        case Scheme::CF: {
            CfSolution sol = solve_cf_fixed_point(p);
            r.rate = r.bc_cut = r.mac_cut = rate_cf(p, sol);
            r.cf_saturated = sol.saturated;
            r.cf_residual = sol.residual;
            break;
        }
        case Scheme::RF:
            r.rate = r.bc_cut = r.mac_cut = rate_rf(p);
            break;
        case Scheme::CADF:
            return optimize_cadf(p, ec.opt);
        default:
            throw std::invalid_argument("time-sharing composites need timeshare mode");
    }
    return r;
}

namespace {

struct Task {
    int M;
    double power_db;
    Scheme scheme;
    ChannelParams params;
    SweepMode mode;
};

std::vector<SweepRow> run_tasks(const std::vector<Task>& tasks, const EngineConfig& ec) {
    std::vector<SweepRow> rows(tasks.size());
    EngineConfig inner = ec;
    inner.opt.parallel = false;
    inner.ts.parallel = false;
    inner.ts.cadf_full.parallel = false;

    auto run_one = [&](size_t i, const EngineConfig& cfg) {
        const Task& t = tasks[i];
        SweepRow row;
        row.M = t.M;
        row.power_db = t.power_db;
        row.scheme = t.scheme;
        auto t0 = std::chrono::steady_clock::now();
        row.report = point_report(t.scheme, t.params, t.mode, cfg);
        if (ec.timings) {
            auto t1 = std::chrono::steady_clock::now();
            row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        rows[i] = row;
    };

    const long long n = static_cast<long long>(tasks.size());
#ifdef _OPENMP
    if (ec.parallel_rows) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < n; ++i) run_one(i, inner);
    } else {
        for (long long i = 0; i < n; ++i) run_one(i, ec);
    }
#else
    for (long long i = 0; i < n; ++i) run_one(i, ec);
#endif

    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.M != b.M) return a.M < b.M;
        if (a.power_db != b.power_db) return a.power_db < b.power_db;
        return static_cast<int>(a.scheme) < static_cast<int>(b.scheme);
    });
    return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const EngineConfig& ec) {
    spec.validate();
    std::vector<Task> tasks;
    for (int m : spec.m_values) {
        double pr = spec.pr_total > 0.0 ? spec.pr_total / m : spec.pr_per_relay;
        ChannelParams p{m, spec.ps, pr, spec.mode == SweepMode::timeshare ? 1.0 : spec.rho};
        p.validate();
        double power_db = linear_to_db(m * pr);
        for (Scheme s : spec.schemes) {
            if (s == Scheme::RF || s == Scheme::RF_DF)
                if (spec.ps <= 1.0) continue;  // outside the RF precondition
            tasks.push_back({m, power_db, s, p, spec.mode});
        }
    }
    return run_tasks(tasks, ec);
}

std::vector<SweepRow> run_figure(FigureId id, const EngineConfig& ec) {
    const std::vector<int> m_sweep = {1, 2, 4, 8, 16, 32, 64};
    const std::vector<Scheme> rate_schemes = {Scheme::CADF, Scheme::AF, Scheme::DF,
                                              Scheme::CF, Scheme::RF, Scheme::CUTSET};

    SweepSpec spec;
    spec.schemes = rate_schemes;
    spec.m_values = m_sweep;
    switch (id) {
        case FigureId::fig5:
            spec.ps = 300.0;
            spec.pr_total = 10.0;
            spec.rho = 0.5;
            spec.mode = SweepMode::mismatch;
            return run_sweep(spec, ec);
        case FigureId::fig6:
            spec.ps = 10.0;
            spec.pr_total = 300.0;
            spec.rho = 2.0;
            spec.mode = SweepMode::mismatch;
            return run_sweep(spec, ec);
        case FigureId::fig7:
            spec.ps = 300.0;
            spec.pr_total = 10.0;
            spec.mode = SweepMode::half_duplex;
            return run_sweep(spec, ec);
        case FigureId::fig8:
            spec.ps = 10.0;
            spec.pr_total = 300.0;
            spec.mode = SweepMode::half_duplex;
            return run_sweep(spec, ec);
        case FigureId::fig9:
            break;
    }

    // Time-sharing comparison in the two-relay equal-bandwidth setup:
    // Ps = 20 dB, M^2*Pr swept from -10 to 40 dB in 2 dB steps.
    std::vector<Task> tasks;
    const int M = 2;
    const std::vector<Scheme> ts_schemes = {Scheme::CADF_DF, Scheme::RF_DF, Scheme::AF_DF,
                                            Scheme::CADF, Scheme::RF, Scheme::AF, Scheme::DF};
    for (int db = -10; db <= 40; db += 2) {
        double pr = db_to_linear(db) / (M * M);
        ChannelParams p{M, 100.0, pr, 1.0};
        for (Scheme s : ts_schemes)
            tasks.push_back({M, static_cast<double>(db), s, p, SweepMode::timeshare});
    }
    return run_tasks(tasks, ec);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

std::string g12(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string json_num(double v) {
    if (!std::isfinite(v)) return "null";
    return g12(v);
}

}  // namespace

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "M,power_db,scheme,rate,units,bc_cut,mac_cut,alpha1,alpha2,beta1,beta2,"
           "ps_af_frac1,pr_af_frac1,ps_af_frac2,pr_af_frac2,t1,t2,runtime_ms\n";
    for (const SweepRow& row : rows) {
        const RateReport& r = row.report;
        out << row.M << ',' << g12(row.power_db) << ',' << to_string(row.scheme) << ','
            << g12(r.rate) << ',' << to_string(r.units) << ',' << g12(r.bc_cut) << ','
            << g12(r.mac_cut) << ',';
        if (r.allocation) {
            const CadfAllocation& a = *r.allocation;
            double ps = a.splits[0].ps_af + a.splits[0].ps_df;
            double pr = a.splits[0].pr_af + a.splits[0].pr_df;
            out << g12(a.alpha[0]) << ',' << g12(a.alpha[1]) << ',' << g12(a.beta1) << ','
                << g12(a.beta2) << ',' << g12(a.splits[0].ps_af / ps) << ','
                << g12(a.splits[0].pr_af / pr) << ',' << g12(a.splits[1].ps_af / ps) << ','
                << g12(a.splits[1].pr_af / pr) << ',';
        } else {
            out << ",,,,,,,,";
        }
        if (r.plan) {
            out << g12(r.plan->t1) << ',' << g12(r.plan->t2) << ',';
        } else {
            out << ",,";
        }
        out << g12(row.runtime_ms) << '\n';
    }
    return out.str();
}

std::string report_to_json(const RateReport& r, const ChannelParams& p) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"scheme\": \"" << to_string(r.scheme) << "\",\n";
    out << "  \"relays\": " << p.M << ",\n";
    out << "  \"ps\": " << json_num(p.ps) << ",\n";
    out << "  \"pr\": " << json_num(p.pr) << ",\n";
    out << "  \"rho\": " << json_num(p.rho) << ",\n";
    out << "  \"rate\": " << json_num(r.rate) << ",\n";
    out << "  \"units\": \"" << to_string(r.units) << "\"";
    if (r.has_cuts()) {
        out << ",\n  \"bc_cut\": " << json_num(r.bc_cut);
        out << ",\n  \"mac_cut\": " << json_num(r.mac_cut);
    }
    if (r.allocation) {
        const CadfAllocation& a = *r.allocation;
        out << ",\n  \"allocation\": {";
        out << "\"alpha1\": " << json_num(a.alpha[0]) << ", \"alpha2\": " << json_num(a.alpha[1]);
        out << ", \"beta1\": " << json_num(a.beta1) << ", \"beta2\": " << json_num(a.beta2);
        for (int l = 0; l < 2; ++l) {
            const BandPowerSplit& s = a.splits[l];
            out << ", \"band" << l + 1 << "\": {\"ps_af\": " << json_num(s.ps_af)
                << ", \"ps_df\": " << json_num(s.ps_df) << ", \"pr_af\": " << json_num(s.pr_af)
                << ", \"pr_df\": " << json_num(s.pr_df) << "}";
        }
        out << "}";
    }
    if (r.hop_w) out << ",\n  \"hop_w\": " << json_num(*r.hop_w);
    if (r.plan) {
        const TimeSharePlan& t = *r.plan;
        out << ",\n  \"plan\": {\"t1\": " << json_num(t.t1) << ", \"t2\": " << json_num(t.t2)
            << ", \"ps_a\": " << json_num(t.ps_a) << ", \"ps_b\": " << json_num(t.ps_b)
            << ", \"pr_a\": " << json_num(t.pr_a) << ", \"pr_b\": " << json_num(t.pr_b) << "}";
    }
    if (r.scheme == Scheme::CF) {
        out << ",\n  \"cf_saturated\": " << (r.cf_saturated ? "true" : "false");
        out << ",\n  \"cf_residual\": " << json_num(r.cf_residual);
    }
    out << "\n}\n";
    return out.str();
}

}  // namespace relay
