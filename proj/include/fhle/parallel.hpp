#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace fhle {

// Every data-parallel kernel in the library takes an Execution argument. The
// Serial path is the reference implementation the parallel one is tested
// against; both write results to index-addressed slots so the output does not
// depend on scheduling.
enum class Execution { Serial, Parallel };

// Worker count honoring the FHLE_THREADS cap (falls back to the OpenMP default).
int configured_threads();

// Applies FHLE_THREADS to the OpenMP runtime. Idempotent.
void apply_thread_cap();

namespace detail {
template <class Body>
void serial_for(std::size_t count, Body& body) {
  for (std::size_t i = 0; i < count; ++i) body(i);
}
}  // namespace detail

// Calls body(i) for i in [0, count). Exceptions thrown inside the parallel
// region are captured and the first one is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Body&& body, Execution exec = Execution::Parallel) {
  if (exec == Execution::Serial || count < 2) {
    detail::serial_for(count, body);
    return;
  }
  std::exception_ptr first_error;
  std::mutex guard;
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(configured_threads())
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fhle
