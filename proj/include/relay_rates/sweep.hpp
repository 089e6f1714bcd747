#pragma once

#include <string>
#include <vector>

#include "relay_rates/cadf_optimize.hpp"
#include "relay_rates/report.hpp"
#include "relay_rates/timeshare.hpp"

namespace relay {

enum class SweepMode { mismatch, half_duplex, timeshare };

const char* to_string(SweepMode m);
SweepMode sweep_mode_from_string(const std::string& name);

enum class FigureId { fig5, fig6, fig7, fig8, fig9 };

const char* to_string(FigureId f);
FigureId figure_from_string(const std::string& name);

// Declarative experiment grid. Figures fix M*Pr as M varies, so the total
// relay power is the primary knob; pr_per_relay is the single-point
// alternative. Exactly one of the two must be set (> 0).
struct SweepSpec {
    std::vector<Scheme> schemes;
    std::vector<int> m_values;
    double ps = 0.0;
    double pr_total = 0.0;     // M*Pr held fixed across the sweep
    double pr_per_relay = 0.0;
    double rho = 1.0;
    SweepMode mode = SweepMode::mismatch;
    uint64_t seed = 0;

    void validate() const;
};

struct SweepRow {
    int M = 0;
    double power_db = 0.0;  // M*Pr in dB (rate-vs-M sweeps) or M^2*Pr in dB (fig9)
    Scheme scheme = Scheme::CUTSET;
    RateReport report;
    double runtime_ms = std::nan("");
};

struct EngineConfig {
    OptimizerConfig opt;     // mismatch / half-duplex optimizer
    TimeShareConfig ts;      // fig9 / timeshare sweeps
    bool parallel_rows = true;
    bool timings = false;    // fill runtime_ms (non-deterministic output)
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const EngineConfig& ec = {});
std::vector<SweepRow> run_figure(FigureId id, const EngineConfig& ec = {});

// Computes one scheme's report at a point; shared by sweeps and the CLI.
RateReport point_report(Scheme scheme, const ChannelParams& p, SweepMode mode,
                        const EngineConfig& ec = {});

std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::string report_to_json(const RateReport& r, const ChannelParams& p);

}  // namespace relay
