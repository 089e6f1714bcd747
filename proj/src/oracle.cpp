#include "relay_rates/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "relay_rates/grid_scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relay {

namespace {

struct OracleBest {
    double rate = -1.0;
    CadfAllocation alloc;
    bool valid = false;
};

// Exact-rate comparison with the allocation key as tie-break; order-independent.
bool oracle_better(const OracleBest& c, const OracleBest& best) {
    if (!best.valid) return c.valid;
    if (!c.valid) return false;
    if (c.rate != best.rate) return c.rate > best.rate;
    auto key = [](const CadfAllocation& a) {
        return std::array<double, 8>{a.alpha[0] + a.alpha[1], a.beta1, a.alpha[1],
                                     a.splits[0].ps_af, a.splits[0].pr_af,
                                     a.splits[1].ps_af, a.splits[1].pr_af, 0.0};
    };
    return key(c.alloc) < key(best.alloc);
}

}  // namespace

RateReport brute_force_cadf(const ChannelParams& p, int n_grid, bool parallel) {
    p.validate();
    if (n_grid < 5) throw std::invalid_argument("brute_force_cadf: n_grid must be >= 5");

    const int n = n_grid;
    const double amax = std::min(1.0, p.rho);
    const double cap_bc = capacity(p.ps);
    const double cap_mac = capacity(static_cast<double>(p.M) * p.M * p.pr);
    std::vector<double> fs = warped_lattice(p.ps, 0.0, 1.0, n);
    std::vector<double> fr = warped_lattice(p.pr, 0.0, 1.0, n);

    std::vector<BandPowerSplit> splits(static_cast<size_t>(n) * n);
    std::vector<BandCoefs> coefs(splits.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            splits[static_cast<size_t>(i) * n + j] = split_from_fractions(p, fs[i], fr[j]);
            coefs[static_cast<size_t>(i) * n + j] = band_coefs(p, splits[i * n + j]);
        }

    const int n_splits = n * n;
    const long long total = static_cast<long long>(n_splits) * n_splits;

    auto scan_range = [&](long long lo, long long hi, OracleBest* best) {
        for (long long idx = lo; idx < hi; ++idx) {
            int k1 = static_cast<int>(idx / n_splits);
            int k2 = static_cast<int>(idx % n_splits);
            auto offer = [&](double a1, double a2, double be1, double be2) {
                CadfAllocation a;
                a.alpha = {a1, a2};
                a.beta1 = std::max(0.0, be1);
                a.beta2 = std::max(0.0, be2);
                a.splits = {splits[k1], splits[k2]};
                OracleBest c;
                c.valid = true;
                c.alloc = a;
                c.rate = cadf_rate_successive(p, a).rate;
                if (oracle_better(c, *best)) *best = c;
            };
            for (int ia = 0; ia < n; ++ia)
                for (int ja = 0; ja + ia <= n - 1; ++ja) {
                    double a1 = amax * ia / (n - 1);
                    double a2 = amax * ja / (n - 1);
                    offer(a1, a2, p.rho - a1 - a2, 1.0 - a1 - a2);
                }
            // The alpha lattice misses cut-equalization optima; the exact inner
            // solution (validated separately against dense grids) closes that.
            InnerPoint ip = solve_inner_mismatch(coefs[k1], coefs[k2], cap_bc, cap_mac, p.rho);
            offer(ip.a1, ip.a2, ip.beta1, ip.beta2);
        }
    };

    OracleBest best;
#ifdef _OPENMP
    if (parallel) {
        int nthreads = omp_get_max_threads();
        std::vector<OracleBest> locals(nthreads);
#pragma omp parallel num_threads(nthreads)
        {
            int tid = omp_get_thread_num();
            OracleBest local;
#pragma omp for schedule(static)
            for (long long idx = 0; idx < total; ++idx) scan_range(idx, idx + 1, &local);
            locals[tid] = local;
        }
        for (const auto& c : locals)
            if (oracle_better(c, best)) best = c;
    } else {
        scan_range(0, total, &best);
    }
#else
    (void)parallel;
    scan_range(0, total, &best);
#endif
    return cadf_rate_successive(p, best.alloc);
}

double brute_force_inner(const ChannelParams& p, const BandPowerSplit& s1,
                         const BandPowerSplit& s2, int n_grid) {
    p.validate();
    double m = p.M;
    BandCoefs b1 = band_coefs(p, s1);
    BandCoefs b2 = band_coefs(p, s2);
    double cap_bc = capacity(p.ps);
    double cap_mac = capacity(m * m * p.pr);
    double amax = std::min(1.0, p.rho);

    double best = -1.0;
    for (int i = 0; i < n_grid; ++i) {
        double a1 = amax * i / (n_grid - 1);
        for (int j = 0; j + i <= n_grid - 1; ++j) {
            double a2 = amax * j / (n_grid - 1);
            double bc = cap_bc * (p.rho - a1 - a2) + b1.bc * a1 + b2.bc * a2;
            double mac = cap_mac * (1.0 - a1 - a2) + b1.mac * a1 + b2.mac * a2;
            best = std::max(best, std::min(bc, mac));
        }
    }
    return best;
}

}  // namespace relay
