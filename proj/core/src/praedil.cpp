// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/praedil.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "dilator/checks.hpp"
#include "dilator/errors.hpp"
#include "dilator/parallel.hpp"

namespace dilator {

bool IndexSetFinLessEq(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.empty()) return true;
  if (b.empty()) return false;
  return *std::max_element(a.begin(), a.end()) <= *std::max_element(b.begin(), b.end());
}

IndexSet UnionOf(std::span<const IndexSet> sets) {
  IndexSet out;
  for (const IndexSet& s : sets) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string IndexSetString(std::span<const std::size_t> a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(a[i]);
  }
  return out + "}";
}

namespace {

std::vector<std::vector<Token>> Pools(const PraeDilator& t, std::size_t max_n, std::size_t bound) {
  std::vector<std::vector<Token>> pools;
  pools.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) pools.push_back(t.Members(n, bound));
  return pools;
}

TokenCompare At(const PraeDilator& t, std::size_t n) {
  return [&t, n](const Token& a, const Token& b) { return t.compare(n, a, b); };
}

// Does some member of T_k (from the pool) map onto sigma along e?
bool HasPreimage(const PraeDilator& t, const FinEmbedding& e, const Token& sigma,
                 std::span<const Token> pool_k) {
  try {
    Token guess = t.pullback(e, sigma);
    if (t.member(e.domain_size(), guess) && t.map(e, guess) == sigma) return true;
  } catch (const DomainError&) {
    // Fall back to search.
  }
  return std::any_of(pool_k.begin(), pool_k.end(),
                     [&](const Token& s0) { return t.map(e, s0) == sigma; });
}

void CheckMaps(const PraeDilator& t, std::size_t n, std::size_t max_n, std::span<const Token> pool,
               SuiteReport& report) {
  for (std::size_t m = n; m <= max_n; ++m) {
    for (const FinEmbedding& f : AllEmbeddings(n, m)) {
      std::vector<Token> images;
      images.reserve(pool.size());
      for (const Token& s : pool) {
        report.checks += 4;
        Token image = t.map(f, s);
        images.push_back(image);
        if (!t.member(m, image)) {
          report.Fail("map-member", n, Witness({s, image}));
          continue;
        }
        if (t.size(image) != t.size(s)) report.Fail("size-natural", n, Witness({s, image}));
        IndexSet expected = FinsubsetImage(f, t.supp(n, s));
        if (t.supp(m, image) != expected) {
          report.Fail("supp-natural", n, Witness({s, image}),
                      "expected " + IndexSetString(expected));
        }
        try {
          if (t.pullback(f, image) != s) report.Fail("pullback", n, Witness({s, image}));
        } catch (const DomainError& e) {
          report.Fail("pullback", n, Witness({s, image}), e.what());
        }
        for (std::size_t l = m; l <= max_n; ++l) {
          for (const FinEmbedding& g : AllEmbeddings(m, l)) {
            ++report.checks;
            if (t.map(g, image) != t.map(f.Then(g), s)) {
              report.Fail("functor-composition", n, Witness({s}),
                          "m=" + std::to_string(m) + " l=" + std::to_string(l));
            }
          }
        }
      }
      // Strict order preservation over every pair of the sorted pool.
      std::mutex mu;
      ParallelFor(pool.size(), [&](std::size_t begin, std::size_t end, std::size_t) {
        SuiteReport local;
        for (std::size_t i = begin; i < end; ++i) {
          for (std::size_t j = i + 1; j < pool.size(); ++j) {
            ++local.checks;
            Ordering before = t.compare(n, pool[i], pool[j]);
            Ordering after = t.compare(m, images[i], images[j]);
            if (before != after) local.Fail("embedding", n, Witness({pool[i], pool[j]}));
          }
        }
        std::lock_guard<std::mutex> lock(mu);
        report.Absorb(local);
      });
    }
  }
}

}  // namespace

SuiteReport CheckPraeDilatorLaws(const Dilator& t, std::size_t max_n, std::size_t bound) {
  SuiteReport report("praedilator-laws");
  report.parameters["dilator"] = t->name;
  report.parameters["max_n"] = static_cast<std::int64_t>(max_n);
  report.parameters["bound"] = static_cast<std::int64_t>(bound);
  std::vector<std::vector<Token>> pools = Pools(*t, max_n, bound);

  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Token> pool = pools[n];
    for (const Token& s : pool) {
      report.checks += 3;
      if (!t->member(n, s)) {
        report.Fail("member", n, Witness({s}));
        continue;
      }
      IndexSet supp = t->supp(n, s);
      if (!AllBelow(supp, n) || !std::is_sorted(supp.begin(), supp.end()) ||
          std::adjacent_find(supp.begin(), supp.end()) != supp.end()) {
        report.Fail("supp-range", n, Witness({s}), IndexSetString(supp));
        continue;
      }
      if (t->map(FinEmbedding::Identity(n), s) != s) report.Fail("functor-identity", n, Witness({s}));
      FinEmbedding e = FinEmbedding::FromRange(n, supp);
      if (!HasPreimage(*t, e, s, pools[supp.size()])) {
        report.Fail("support-condition", n, Witness({s}), "supp " + IndexSetString(supp));
      }
    }
    CheckStrictTotalOrder(pool, At(*t, n), n, report, "linear-");
    SafeSort(pool, At(*t, n));
    CheckMaps(*t, n, max_n, pool, report);
  }
  report.Canonicalize();
  return report;
}

SuiteReport CheckNormality(const Dilator& t, std::size_t max_n, std::size_t bound) {
  if (!t->is_normal()) throw CapabilityError(t->name + " has no normal structure");
  SuiteReport report("normality");
  report.parameters["dilator"] = t->name;
  report.parameters["max_n"] = static_cast<std::int64_t>(max_n);
  report.parameters["bound"] = static_cast<std::int64_t>(bound);

  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Token> mus;
    for (std::size_t m = 0; m < n; ++m) {
      report.checks += 3;
      Token mu = t->Mu(n, m);
      mus.push_back(mu);
      if (!t->member(n, mu)) {
        report.Fail("mu-member", n, Witness({mu}));
        continue;
      }
      if (t->supp(n, mu) != IndexSet{m}) report.Fail("mu-support", n, Witness({mu}));
      if (m > 0 && !t->Less(n, mus[m - 1], mu)) {
        report.Fail("mu-embedding", n, Witness({mus[m - 1], mu}));
      }
      for (std::size_t k = n; k <= max_n; ++k) {
        for (const FinEmbedding& f : AllEmbeddings(n, k)) {
          ++report.checks;
          if (t->map(f, mu) != t->Mu(k, f(m))) report.Fail("mu-natural", n, Witness({mu}));
        }
      }
    }

    std::vector<Token> pool = t->Members(n, bound);
    SafeSort(pool, At(*t, n));
    std::vector<IndexSet> supps;
    supps.reserve(pool.size());
    for (const Token& s : pool) supps.push_back(t->supp(n, s));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t m = 0; m < n; ++m) {
        ++report.checks;
        bool below = t->Less(n, pool[i], mus[m]);
        bool supp_below = AllBelow(supps[i], m);
        if (below != supp_below) {
          report.Fail("normality", n, Witness({pool[i], mus[m]}),
                      below ? "below mu but support not below" : "support below but not below mu");
        }
      }
    }
    // pool is ascending, so i <= j means pool[i] <= pool[j].
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); ++j) {
        ++report.checks;
        if (!IndexSetFinLessEq(supps[i], supps[j])) {
          report.Fail("support-monotone", n, Witness({pool[i], pool[j]}));
        }
      }
    }
  }
  report.Canonicalize();
  return report;
}

}  // namespace dilator
