#include "fhle/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace fhle {

int configured_threads() {
  int threads = omp_get_max_threads();
  if (const char* env = std::getenv("FHLE_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap < threads) threads = cap;
    } catch (...) {
      // Malformed values leave the runtime default in place.
    }
  }
  return threads < 1 ? 1 : threads;
}

void apply_thread_cap() { omp_set_num_threads(configured_threads()); }

}  // namespace fhle
