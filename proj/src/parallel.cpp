#include "obm/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace obm {
namespace {

int from_environment() {
  if (const char* env = std::getenv("OBM_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

std::atomic<int>& override_slot() {
  static std::atomic<int> slot{0};
  return slot;
}

}  // namespace

int worker_count() {
  const int forced = override_slot().load();
  if (forced > 0) return forced;
  static const int env = from_environment();
  return env;
}

void set_worker_count(int workers) { override_slot().store(workers > 0 ? workers : 0); }

}  // namespace obm
