// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace dilator {

std::size_t WorkerCount() {
  if (const char* env = std::getenv(kWorkersEnv); env != nullptr && *env != '\0') {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(std::min(v, 256L));
    } catch (const std::exception&) {
      // Fall through to the default on garbage.
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void ParallelFor(std::size_t count,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  std::size_t workers = std::min(WorkerCount(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    body(0, count, 0);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk, end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace dilator
