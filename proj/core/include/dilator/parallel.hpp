// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef DILATOR_PARALLEL_HPP_
#define DILATOR_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace dilator {

inline constexpr char kWorkersEnv[] = "DILATOR_WORKERS";

// Worker count from DILATOR_WORKERS, defaulting to the hardware concurrency.
std::size_t WorkerCount();

// Splits [0, count) into contiguous shards and runs body(begin, end, shard)
// on up to WorkerCount() threads. The first exception thrown by any shard is
// rethrown after all shards finish.
void ParallelFor(std::size_t count,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace dilator

#endif  // DILATOR_PARALLEL_HPP_
