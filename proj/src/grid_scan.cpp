#include "relay_rates/grid_scan.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relay {

BandPowerSplit split_from_fractions(const ChannelParams& p, double fs, double fr) {
    BandPowerSplit s;
    s.ps_af = fs * p.ps;
    s.ps_df = p.ps - s.ps_af;
    s.pr_af = fr * p.pr;
    s.pr_df = p.pr - s.pr_af;
    return s;
}

double warp_fraction(double u, double power) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return std::expm1(u * std::log1p(power)) / power;
}

double unwarp_fraction(double f, double power) {
    if (f <= 0.0) return 0.0;
    if (f >= 1.0) return 1.0;
    return std::log1p(f * power) / std::log1p(power);
}

std::vector<double> warped_lattice(double power, double u_lo, double u_hi, int n) {
    u_lo = std::max(0.0, u_lo);
    u_hi = std::min(1.0, u_hi);
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = warp_fraction(0.5 * (u_lo + u_hi), power);
        return v;
    }
    for (int i = 0; i < n; ++i)
        v[i] = warp_fraction(u_lo + (u_hi - u_lo) * i / (n - 1), power);
    return v;
}

BandTable make_band_table(const ChannelParams& p,
                          std::vector<double> fs_values, std::vector<double> fr_values) {
    BandTable t;
    t.fs = std::move(fs_values);
    t.fr = std::move(fr_values);
    t.splits.resize(t.fs.size() * t.fr.size());
    t.coefs.resize(t.splits.size());
    for (size_t i = 0; i < t.fs.size(); ++i)
        for (size_t j = 0; j < t.fr.size(); ++j) {
            size_t k = i * t.fr.size() + j;
            t.splits[k] = split_from_fractions(p, t.fs[i], t.fr[j]);
            t.coefs[k] = band_coefs(p, t.splits[k]);
        }
    return t;
}

bool candidate_better(const SplitCandidate& c, const SplitCandidate& best) {
    if (!best.valid) return c.valid;
    if (!c.valid) return false;
    if (c.rate != best.rate) return c.rate > best.rate;
    double ka = c.inner.a1 + c.inner.a2, kb = best.inner.a1 + best.inner.a2;
    if (ka != kb) return ka < kb;
    if (c.inner.beta1 != best.inner.beta1) return c.inner.beta1 < best.inner.beta1;
    if (c.inner.a2 != best.inner.a2) return c.inner.a2 < best.inner.a2;
    if (c.fs1 != best.fs1) return c.fs1 < best.fs1;
    if (c.fr1 != best.fr1) return c.fr1 < best.fr1;
    if (c.fs2 != best.fs2) return c.fs2 < best.fs2;
    return c.fr2 < best.fr2;
}

namespace {

SplitCandidate evaluate_pair(const ScanProblem& prob, int k1, int k2) {
    const BandTable& t1 = *prob.band1;
    SplitCandidate c;
    c.valid = true;
    int nfr1 = static_cast<int>(t1.fr.size());
    c.fs1 = t1.fs[k1 / nfr1];
    c.fr1 = t1.fr[k1 % nfr1];
    if (k2 < 0) {
        c.inner = prob.mode == BandMode::mismatch
                      ? solve_inner_mismatch_1band(t1.coefs[k1], prob.cap_bc, prob.cap_mac, prob.rho)
                      : solve_inner_half_duplex_1band(t1.coefs[k1], prob.cap_bc, prob.cap_mac);
    } else {
        const BandTable& t2 = *prob.band2;
        int nfr2 = static_cast<int>(t2.fr.size());
        c.fs2 = t2.fs[k2 / nfr2];
        c.fr2 = t2.fr[k2 % nfr2];
        c.inner = prob.mode == BandMode::mismatch
                      ? solve_inner_mismatch(t1.coefs[k1], t2.coefs[k2], prob.cap_bc,
                                             prob.cap_mac, prob.rho)
                      : solve_inner_half_duplex(t1.coefs[k1], t2.coefs[k2], prob.cap_bc,
                                                prob.cap_mac);
    }
    c.rate = c.inner.rate;
    return c;
}

// One row of the pair scan: fixed first-band point, all second-band points.
void scan_row(const ScanProblem& prob, int k1, SplitCandidate* best) {
    if (!prob.band2) {
        SplitCandidate c = evaluate_pair(prob, k1, -1);
        if (candidate_better(c, *best)) *best = c;
        return;
    }
    int n2 = prob.band2->size();
    for (int k2 = prob.symmetric ? k1 : 0; k2 < n2; ++k2) {
        SplitCandidate c = evaluate_pair(prob, k1, k2);
        if (candidate_better(c, *best)) *best = c;
    }
}

}  // namespace

SplitCandidate scan_best_serial(const ScanProblem& prob) {
    SplitCandidate best;
    int n1 = prob.band1->size();
    for (int k1 = 0; k1 < n1; ++k1) scan_row(prob, k1, &best);
    return best;
}

SplitCandidate scan_best_parallel(const ScanProblem& prob) {
#ifndef _OPENMP
    return scan_best_serial(prob);
#else
    int n1 = prob.band1->size();
    int nthreads = omp_get_max_threads();
    std::vector<SplitCandidate> locals(nthreads);
#pragma omp parallel num_threads(nthreads)
    {
        int tid = omp_get_thread_num();
        SplitCandidate best;
        // Interleaved rows balance the triangular symmetric scan; the combine
        // is order-independent, so scheduling does not affect the result.
#pragma omp for schedule(static, 1)
        for (int k1 = 0; k1 < n1; ++k1) scan_row(prob, k1, &best);
        locals[tid] = best;
    }
    SplitCandidate best;
    for (const auto& c : locals)
        if (candidate_better(c, best)) best = c;
    return best;
#endif
}

}  // namespace relay
