#include "relay_rates/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relay {

int thread_cap_from_env() {
    const char* v = std::getenv("RELAY_RATES_THREADS");
    if (!v || !*v) return 0;
    try {
        int n = std::stoi(v);
        return n > 0 ? n : 0;
    } catch (...) {
        return 0;
    }
}

void apply_thread_env() {
#ifdef _OPENMP
    int cap = thread_cap_from_env();
    if (cap > 0) omp_set_num_threads(cap);
#endif
}

int effective_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace relay
