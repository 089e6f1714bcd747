#pragma once

namespace relay {

// Worker cap from RELAY_RATES_THREADS (0 or unset = automatic).
int thread_cap_from_env();

// Applies the cap to the OpenMP runtime; call once at tool startup.
void apply_thread_env();

// Workers OpenMP will actually use (1 when built without OpenMP).
int effective_workers();

}  // namespace relay
