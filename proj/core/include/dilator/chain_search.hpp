// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Bounded search for strictly descending chains. A found chain is a real
// witness of ill-foundedness; "none in pool" only speaks about the pool.

#ifndef DILATOR_CHAIN_SEARCH_HPP_
#define DILATOR_CHAIN_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dilator/checks.hpp"
#include "dilator/praedil.hpp"

namespace dilator {

enum class ChainStatus {
  kFound,       // `chain` holds depth strictly descending elements
  kNoneInPool,  // the whole pool was examined and has no such chain
  kInconclusive // the comparison budget ran out first
};

std::string ToString(ChainStatus status);

struct ChainResult {
  ChainStatus status = ChainStatus::kInconclusive;
  std::vector<Token> chain;       // descending
  std::uint64_t comparisons = 0;
  std::size_t pool_size = 0;
};

struct ChainBudget {
  std::uint64_t max_comparisons = 10'000'000;
};

// Searches `pool` (any order, duplicates allowed) for a chain of `depth`
// elements descending under cmp, starting at `start` when given. cmp must
// be a linear order on the pool; every link of a returned chain is
// re-verified with cmp.
ChainResult SearchDescendingChain(std::span<const Token> pool, const TokenCompare& cmp,
                                  std::size_t depth, const ChainBudget& budget,
                                  const std::optional<Token>& start = std::nullopt);

// Grows the pool T_n(bound) for bound = 1 .. max_bound until a chain is
// found. NoneInPool refers to the pool at max_bound.
ChainResult SearchDilatorChain(const Dilator& t, std::size_t n, std::size_t depth,
                               std::size_t max_bound, const ChainBudget& budget,
                               const std::optional<Token>& start = std::nullopt);

}  // namespace dilator

#endif  // DILATOR_CHAIN_SEARCH_HPP_
