// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/checks.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "dilator/parallel.hpp"

namespace dilator {

namespace {

void MergeSortRange(std::vector<Token>& v, std::vector<Token>& scratch, std::size_t lo,
                    std::size_t hi, const TokenCompare& cmp) {
  if (hi - lo < 2) return;
  std::size_t mid = lo + (hi - lo) / 2;
  MergeSortRange(v, scratch, lo, mid, cmp);
  MergeSortRange(v, scratch, mid, hi, cmp);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (cmp(v[j], v[i]) < 0) {
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, v.begin() + lo);
}

constexpr std::size_t kTripleSearchLimit = 160;

// Looks for a < b < c with c < a among the first few elements.
std::optional<std::vector<Token>> FindCycle(std::span<const Token> pool, const TokenCompare& cmp) {
  std::size_t n = std::min(pool.size(), kTripleSearchLimit);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || cmp(pool[a], pool[b]) >= 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (cmp(pool[b], pool[c]) < 0 && cmp(pool[c], pool[a]) <= 0) {
          return std::vector<Token>{pool[a], pool[b], pool[c]};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

void SafeSort(std::vector<Token>& tokens, const TokenCompare& cmp) {
  std::vector<Token> scratch(tokens.size());
  MergeSortRange(tokens, scratch, 0, tokens.size(), cmp);
}

std::vector<std::string> Witness(std::initializer_list<Token> tokens) {
  return Witness(std::span<const Token>(tokens.begin(), tokens.size()));
}

std::vector<std::string> Witness(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.str());
  return out;
}

void CheckStrictTotalOrder(std::span<const Token> pool, const TokenCompare& cmp, std::size_t n,
                           SuiteReport& report, const std::string& prefix) {
  std::vector<Token> sorted;
  sorted.reserve(pool.size());
  std::unordered_set<Token> seen;
  for (const Token& t : pool) {
    ++report.checks;
    if (!seen.insert(t).second) {
      report.Fail(prefix + "duplicate", n, Witness({t}));
      continue;
    }
    sorted.push_back(t);
  }
  SafeSort(sorted, cmp);

  for (const Token& t : sorted) {
    ++report.checks;
    if (cmp(t, t) != 0) report.Fail(prefix + "irreflexive", n, Witness({t}));
  }

  std::mutex mu;
  bool inversion = false;
  ParallelFor(sorted.size(), [&](std::size_t begin, std::size_t end, std::size_t) {
    SuiteReport local;
    bool local_inversion = false;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) {
        ++local.checks;
        Ordering forward = cmp(sorted[i], sorted[j]);
        Ordering backward = cmp(sorted[j], sorted[i]);
        if (forward == 0 || backward == 0) {
          local.Fail(prefix + "trichotomy", n, Witness({sorted[i], sorted[j]}),
                     "distinct tokens compare equal");
        } else if ((forward < 0) == (backward < 0)) {
          local.Fail(prefix + "trichotomy", n, Witness({sorted[i], sorted[j]}),
                     "comparison is not antisymmetric");
        } else if (forward > 0) {
          local_inversion = true;
          local.Fail(prefix + "transitive", n, Witness({sorted[i], sorted[j]}),
                     "pair out of order after sorting");
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    report.Absorb(local);
    inversion = inversion || local_inversion;
  });
  if (inversion) {
    if (auto cycle = FindCycle(sorted, cmp)) {
      report.Fail(prefix + "transitive", n, Witness(*cycle), "cycle a < b < c <= a");
    }
  }
}

}  // namespace dilator
