#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relay_rates/cadf_optimize.hpp"

namespace relay {

enum class SuiteId { theorem3, prop1, prop2, oracle, baselines };

const char* to_string(SuiteId s);
SuiteId suite_from_string(const std::string& name);  // throws std::invalid_argument

struct VerifySummary {
    SuiteId suite = SuiteId::prop1;
    int samples = 0;
    uint64_t seed = 0;
    int failures = 0;
    double worst_margin = 0.0;  // minimal slack over all checks; negative = violation
    std::vector<std::string> lines;  // deterministic per-suite detail
};

// Runs the named property suite over seeded random draws from the standard
// box. Deterministic for a given (suite, samples, seed).
VerifySummary run_verify(SuiteId suite, int samples, uint64_t seed,
                         const OptimizerConfig& cfg = {}, bool parallel = true);

std::string verify_json(const VerifySummary& s);  // {suite, samples, seed, failures, worst_margin}

}  // namespace relay
