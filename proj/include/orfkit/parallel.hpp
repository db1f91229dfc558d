#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace orfkit {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index
/// is processed exactly once and writes only its own output slot, so results
/// do not depend on the worker count. The first exception is rethrown.
template <class Body>
void parallel_for(int count, int workers, Body&& body) {
  workers = std::clamp(workers, 1, std::max(1, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace orfkit
