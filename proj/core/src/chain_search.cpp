// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/chain_search.hpp"

#include "dilator/errors.hpp"

namespace dilator {

std::string ToString(ChainStatus status) {
  switch (status) {
    case ChainStatus::kFound:
      return "found";
    case ChainStatus::kNoneInPool:
      return "none-in-pool";
    case ChainStatus::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

struct BudgetExceeded {};

}  // namespace

ChainResult SearchDescendingChain(std::span<const Token> pool, const TokenCompare& cmp,
                                  std::size_t depth, const ChainBudget& budget,
                                  const std::optional<Token>& start) {
  ChainResult result;
  result.pool_size = pool.size();
  TokenCompare counted = [&](const Token& a, const Token& b) {
    if (++result.comparisons > budget.max_comparisons) throw BudgetExceeded{};
    return cmp(a, b);
  };
  try {
    std::vector<Token> sorted(pool.begin(), pool.end());
    if (start) sorted.push_back(*start);
    SafeSort(sorted, counted);
    std::vector<Token> distinct;
    for (Token& t : sorted) {
      if (distinct.empty() || counted(distinct.back(), t) != 0) distinct.push_back(std::move(t));
    }
    // Descending from the start element, or from the top of the pool.
    std::size_t top = distinct.size();
    if (start) {
      top = 0;
      while (top < distinct.size() && counted(distinct[top], *start) != 0) ++top;
      ++top;
    }
    if (top < depth || depth == 0) {
      result.status = depth == 0 ? ChainStatus::kFound : ChainStatus::kNoneInPool;
      return result;
    }
    for (std::size_t i = 0; i < depth; ++i) result.chain.push_back(distinct[top - 1 - i]);
    for (std::size_t i = 1; i < result.chain.size(); ++i) {
      if (counted(result.chain[i], result.chain[i - 1]) >= 0) {
        throw ContractError("comparator is not a linear order on the pool");
      }
    }
    result.status = ChainStatus::kFound;
  } catch (const BudgetExceeded&) {
    result.chain.clear();
    result.status = ChainStatus::kInconclusive;
  }
  return result;
}

ChainResult SearchDilatorChain(const Dilator& t, std::size_t n, std::size_t depth,
                               std::size_t max_bound, const ChainBudget& budget,
                               const std::optional<Token>& start) {
  ChainResult last;
  std::uint64_t spent = 0;
  for (std::size_t bound = 1; bound <= max_bound; ++bound) {
    std::vector<Token> pool = t->Members(n, bound);
    if (start && !t->member(n, *start)) throw DomainError(start->str() + " is not in " + t->name);
    ChainBudget remaining{budget.max_comparisons > spent ? budget.max_comparisons - spent : 0};
    last = SearchDescendingChain(
        pool, [&](const Token& a, const Token& b) { return t->compare(n, a, b); }, depth,
        remaining, start);
    spent += last.comparisons;
    last.comparisons = spent;
    if (last.status != ChainStatus::kNoneInPool) return last;
  }
  return last;
}

}  // namespace dilator
