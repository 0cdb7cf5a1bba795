#include "ppalg/parallel.hpp"

#include <atomic>
#include <cstdlib>

#include <omp.h>

namespace ppalg {

namespace {
std::atomic<int> g_override{0};
}

int thread_count() {
  if (int n = g_override.load(); n > 0) return n;
  if (const char* env = std::getenv("PPALG_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

void set_thread_count(int n) { g_override.store(n > 0 ? n : 0); }

}  // namespace ppalg
