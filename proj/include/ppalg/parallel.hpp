#pragma once

// Thread-count control shared by the OpenMP kernels. Every kernel that has a
// parallel path also keeps a serial one; the two must agree exactly.

#include <cstddef>

namespace ppalg {

enum class Exec { serial, parallel };

/// Threads used by parallel kernels: PPALG_THREADS if set and positive,
/// otherwise the OpenMP default.
int thread_count();
void set_thread_count(int n);

}  // namespace ppalg
