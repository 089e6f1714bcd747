// Command-line front end: single-point rate queries, parameter sweeps, figure
// reproduction, and the randomized verification suites.
//
// Exit codes: 0 success, 1 verification failures, 2 usage error,
// 3 scheme precondition violation (e.g. rematch-and-forward with Ps <= 1).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relay_rates/parallel.hpp"
#include "relay_rates/sweep.hpp"
#include "relay_rates/verify.hpp"

namespace fs = std::filesystem;
using namespace relay;

namespace {

struct PowerFlags {
    double ps = 0.0;
    double pr = 0.0;
    double pr_total = 0.0;
    bool db = false;

    void add_to(CLI::App* cmd, bool require_ps = true) {
        auto* o = cmd->add_option("--ps", ps, "source power per dimension");
        if (require_ps) o->required();
        cmd->add_option("--pr", pr, "per-relay power per dimension");
        cmd->add_option("--total-relay-power", pr_total, "M*Pr held fixed as M varies");
        cmd->add_flag("--db", db, "interpret power flags as dB");
    }

    void to_linear() {
        if (db) {
            ps = db_to_linear(ps);
            if (pr > 0.0 || pr < 0.0) pr = db_to_linear(pr);
            if (pr_total > 0.0 || pr_total < 0.0) pr_total = db_to_linear(pr_total);
        }
    }
};

double per_relay_power(const PowerFlags& f, int m) {
    bool has_pr = f.pr != 0.0, has_total = f.pr_total != 0.0;
    if (has_pr == has_total)
        throw std::invalid_argument("set exactly one of --pr and --total-relay-power");
    return has_pr ? f.pr : f.pr_total / m;
}

std::vector<Scheme> parse_schemes(const std::vector<std::string>& names) {
    std::vector<Scheme> out;
    for (const auto& n : names) out.push_back(scheme_from_string(n));
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Config files are plain key=value lines mirroring the subcommand's flags;
// keys the command line already sets are skipped, so flags win over the file.
std::vector<std::string> config_tokens(const std::string& path,
                                       const std::vector<std::string>& explicit_args) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
    auto given = [&](const std::string& flag) {
        for (const auto& a : explicit_args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    std::vector<std::string> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": empty key");
        if (given("--" + key)) continue;
        tokens.push_back("--" + key);
        if (!val.empty()) tokens.push_back(val);
    }
    return tokens;
}

// Rebuilds the argument list with any --config file expanded in place.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (size_t i = 0; i < args.size();) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a file path");
            config_path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
        } else {
            ++i;
        }
    }
    if (config_path.empty()) return args;
    size_t pos = 0;
    while (pos < args.size() && (args[pos].empty() || args[pos][0] == '-')) ++pos;
    if (pos == args.size()) throw std::invalid_argument("--config requires a subcommand");
    std::vector<std::string> conf = config_tokens(config_path, args);
    args.insert(args.begin() + pos + 1, conf.begin(), conf.end());
    return args;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env();

    CLI::App app{"achievable-rate calculator for the symmetric Gaussian parallel relay channel"};
    app.require_subcommand(1);

    // --- rate ---------------------------------------------------------------
    auto* rate = app.add_subcommand("rate", "one scheme at one operating point (JSON on stdout)");
    std::string rate_scheme;
    int rate_relays = 1;
    double rate_rho = 1.0;
    std::string rate_mode = "mismatch";
    PowerFlags rate_pow;
    rate->add_option("--scheme", rate_scheme, "cadf|af|df|cf|rf|cutset|cadf_df|rf_df|af_df")
        ->required();
    rate->add_option("--relays", rate_relays, "number of relays")->required();
    rate_pow.add_to(rate);
    rate->add_option("--rho", rate_rho, "BC uses per MAC use (default 1)");
    rate->add_option("--mode", rate_mode, "mismatch|half_duplex|timeshare");

    // --- sweep --------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "scheme x relay-count grid to CSV");
    std::vector<std::string> sweep_schemes;
    std::vector<int> sweep_relays;
    double sweep_rho = 1.0;
    std::string sweep_mode = "mismatch", sweep_out;
    uint64_t sweep_seed = 0;
    bool sweep_timings = false;
    PowerFlags sweep_pow;
    sweep->add_option("--schemes", sweep_schemes, "comma-separated scheme list")
        ->required()
        ->delimiter(',');
    sweep->add_option("--relays", sweep_relays, "comma-separated relay counts")
        ->required()
        ->delimiter(',');
    sweep_pow.add_to(sweep);
    sweep->add_option("--rho", sweep_rho, "BC uses per MAC use");
    sweep->add_option("--mode", sweep_mode, "mismatch|half_duplex|timeshare");
    sweep->add_option("--seed", sweep_seed, "RNG seed recorded with the sweep");
    sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");
    sweep->add_flag("--timings", sweep_timings, "fill runtime_ms (non-deterministic)");

    // --- figure -------------------------------------------------------------
    auto* figure = app.add_subcommand("figure", "reproduce a figure experiment as CSV");
    std::string fig_name, fig_out_dir = ".";
    bool fig_timings = false;
    figure->add_option("--name", fig_name, "fig5|fig6|fig7|fig8|fig9|all")->required();
    figure->add_option("--out-dir", fig_out_dir, "output directory (default .)");
    figure->add_flag("--timings", fig_timings, "fill runtime_ms (non-deterministic)");

    // --- verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "randomized property suite (JSON summary)");
    std::string verify_suite;
    int verify_samples = 100;
    uint64_t verify_seed = 0;
    verify->add_option("--suite", verify_suite, "theorem3|prop1|prop2|oracle|baselines")
        ->required();
    verify->add_option("--samples", verify_samples, "number of random draws");
    verify->add_option("--seed", verify_seed, "RNG seed");

    app.footer("Every subcommand accepts --config <file> with key=value lines mirroring its "
               "flags; explicit flags win over the file.");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 consumes back to front
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*rate) {
            rate_pow.to_linear();
            Scheme scheme = scheme_from_string(rate_scheme);
            SweepMode mode = sweep_mode_from_string(rate_mode);
            ChannelParams p{rate_relays, rate_pow.ps, per_relay_power(rate_pow, rate_relays),
                            rate_rho};
            p.validate();
            RateReport r = point_report(scheme, p, mode);
            std::cout << report_to_json(r, p);
        } else if (*sweep) {
            sweep_pow.to_linear();
            SweepSpec spec;
            spec.schemes = parse_schemes(sweep_schemes);
            spec.m_values = sweep_relays;
            spec.ps = sweep_pow.ps;
            spec.pr_total = sweep_pow.pr_total;
            spec.pr_per_relay = sweep_pow.pr;
            spec.rho = sweep_rho;
            spec.mode = sweep_mode_from_string(sweep_mode);
            spec.seed = sweep_seed;
            EngineConfig ec;
            ec.timings = sweep_timings;
            std::string csv = rows_to_csv(run_sweep(spec, ec));
            if (sweep_out.empty())
                std::cout << csv;
            else
                write_file(sweep_out, csv);
        } else if (*figure) {
            std::vector<FigureId> figs;
            if (fig_name == "all")
                figs = {FigureId::fig5, FigureId::fig6, FigureId::fig7, FigureId::fig8,
                        FigureId::fig9};
            else
                figs = {figure_from_string(fig_name)};
            fs::create_directories(fig_out_dir);
            EngineConfig ec;
            ec.timings = fig_timings;
            for (FigureId f : figs) {
                fs::path path = fs::path(fig_out_dir) / (std::string(to_string(f)) + ".csv");
                try {
                    write_file(path, rows_to_csv(run_figure(f, ec)));
                } catch (const std::runtime_error& e) {
                    throw std::runtime_error(std::string(e.what()) + " (figure " + to_string(f) +
                                             ")");
                }
                std::cout << path.string() << "\n";
            }
        } else if (*verify) {
            VerifySummary s = run_verify(suite_from_string(verify_suite), verify_samples,
                                         verify_seed);
            std::cout << "suite=" << to_string(s.suite) << " samples=" << s.samples
                      << " seed=" << s.seed << " pass=" << (s.samples - s.failures) << "/"
                      << s.samples << " worst_margin=";
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", s.worst_margin);
            std::cout << buf << "\n";
            for (const auto& line : s.lines) std::cout << "# " << line << "\n";
            std::cout << verify_json(s) << "\n";
            return s.failures == 0 ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
