#pragma once

#include <vector>

#include "relay_rates/cadf.hpp"

namespace relay {

// Lattice of power-split fractions for one band with the per-point cut
// coefficients precomputed (the 4D pair scan then runs log-free).
struct BandTable {
    std::vector<double> fs;  // source AF fraction values
    std::vector<double> fr;  // relay AF fraction values
    std::vector<BandPowerSplit> splits;  // size fs.size()*fr.size(), row-major in fs
    std::vector<BandCoefs> coefs;

    int size() const { return static_cast<int>(splits.size()); }
};

BandPowerSplit split_from_fractions(const ChannelParams& p, double fs, double fr);

// Power-split fraction lattices live in capacity space: a uniform parameter
// u in [0,1] maps to the fraction ((1+P)^u - 1)/P, so resolution follows the
// rate terms rather than the raw power (narrow low-fraction optima at large P
// would otherwise fall between lattice points).
double warp_fraction(double u, double power);
double unwarp_fraction(double f, double power);
std::vector<double> warped_lattice(double power, double u_lo, double u_hi, int n);

BandTable make_band_table(const ChannelParams& p,
                          std::vector<double> fs_values, std::vector<double> fr_values);

struct ScanProblem {
    const BandTable* band1 = nullptr;
    const BandTable* band2 = nullptr;  // null => single-band scan over band1
    bool symmetric = false;            // band1 == band2: scan unordered pairs
    BandMode mode = BandMode::mismatch;
    double cap_bc = 0.0;   // C(Ps)
    double cap_mac = 0.0;  // C(M^2 Pr)
    double rho = 1.0;      // unused in half-duplex mode
};

// Winning split pair of a lattice scan. Ties in rate resolve by the smallest
// (alpha_total, beta1, alpha2, fs1, fr1, fs2, fr2) key, which makes the result
// independent of evaluation order and thread count.
struct SplitCandidate {
    double rate = -1.0;
    double fs1 = 0.0, fr1 = 0.0, fs2 = 0.0, fr2 = 0.0;
    InnerPoint inner;
    bool valid = false;
};

bool candidate_better(const SplitCandidate& c, const SplitCandidate& best);

SplitCandidate scan_best_serial(const ScanProblem& prob);
SplitCandidate scan_best_parallel(const ScanProblem& prob);

}  // namespace relay
