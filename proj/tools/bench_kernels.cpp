// Times the OpenMP lattice-scan kernels against their serial reference on a
// fixed instance and reports the speedup.

#include <chrono>
#include <cstdio>

#include "relay_rates/cadf_optimize.hpp"
#include "relay_rates/grid_scan.hpp"
#include "relay_rates/oracle.hpp"
#include "relay_rates/parallel.hpp"

using namespace relay;

namespace {

template <typename Fn>
double time_ms(Fn&& fn, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    apply_thread_env();
    ChannelParams p{4, 300.0, 2.5, 0.5};

    std::printf("workers: %d\n\n", effective_workers());

    {
        BandTable t = make_band_table(p, warped_lattice(p.ps, 0.0, 1.0, 33), warped_lattice(p.pr, 0.0, 1.0, 33));
        ScanProblem prob;
        prob.band1 = &t;
        prob.band2 = &t;
        prob.symmetric = true;
        prob.mode = BandMode::mismatch;
        prob.cap_bc = capacity(p.ps);
        prob.cap_mac = capacity(static_cast<double>(p.M) * p.M * p.pr);
        prob.rho = p.rho;

        SplitCandidate a = scan_best_serial(prob);
        SplitCandidate b = scan_best_parallel(prob);
        double ts = time_ms([&] { scan_best_serial(prob); }, 5);
        double tp = time_ms([&] { scan_best_parallel(prob); }, 5);
        std::printf("pair scan 33^4        serial %8.2f ms   parallel %8.2f ms   x%.2f   %s\n",
                    ts, tp, ts / tp, a.rate == b.rate ? "identical" : "MISMATCH");
    }

    {
        OptimizerConfig serial_cfg;
        serial_cfg.parallel = false;
        OptimizerConfig par_cfg;
        double r1 = 0, r2 = 0;
        double ts = time_ms([&] { r1 = optimize_cadf(p, serial_cfg).rate; }, 3);
        double tp = time_ms([&] { r2 = optimize_cadf(p, par_cfg).rate; }, 3);
        std::printf("optimize_cadf         serial %8.2f ms   parallel %8.2f ms   x%.2f   %s\n",
                    ts, tp, ts / tp, r1 == r2 ? "identical" : "MISMATCH");
    }

    {
        double r1 = 0, r2 = 0;
        double ts = time_ms([&] { r1 = brute_force_cadf(p, 13, false).rate; }, 1);
        double tp = time_ms([&] { r2 = brute_force_cadf(p, 13, true).rate; }, 1);
        std::printf("brute_force_cadf n=13 serial %8.2f ms   parallel %8.2f ms   x%.2f   %s\n",
                    ts, tp, ts / tp, r1 == r2 ? "identical" : "MISMATCH");
    }
    return 0;
}
