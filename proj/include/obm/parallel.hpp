#pragma once

namespace obm {

// Worker count for OpenMP kernels. Reads OBM_THREADS once; falls back to the
// OpenMP default when unset or invalid.
int worker_count();

// Overrides OBM_THREADS for the rest of the process (tests, benchmarks).
void set_worker_count(int workers);

}  // namespace obm
