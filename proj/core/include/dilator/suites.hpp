// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Named property suites over bounded term sets. Each returns a SuiteReport
// with its parameters recorded; randomized suites take an explicit seed.

#ifndef DILATOR_SUITES_HPP_
#define DILATOR_SUITES_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dilator/praedil.hpp"
#include "dilator/report.hpp"

namespace dilator {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

// Strict linear order on dT_n for n <= max_n, exhaustively.
SuiteReport DerivLinearitySuite(const Dilator& t, std::size_t max_n, std::size_t bound);

// The collapse is a strictly increasing bijection between T o dT and dT,
// the expansion inverts it, and only (mu m) terms are fixed by
// s -> collapse(<{s}, mu^T(1, 0)>).
SuiteReport DerivEqualizerSuite(const Dilator& t, std::size_t max_n, std::size_t bound);

// Prae-dilator laws and the normality equivalence for dT.
SuiteReport DerivNormalitySuite(const Dilator& t, std::size_t max_n, std::size_t bound);

struct HeightSuiteOptions {
  std::size_t max_n = 2;
  std::size_t bound = 7;
  std::size_t samples = 10'000;         // invariance and comparison samples each
  std::size_t segment_samples = 1'000;  // downward-closure triples
  std::size_t max_order = 3;            // X ranges over finite orders up to this size
  std::uint64_t seed = kDefaultSeed;
};

// Height is invariant under the functorial action; parameters below and a
// smaller height force a smaller term; the height cut is downward closed.
SuiteReport DerivHeightSuite(const Dilator& t, const HeightSuiteOptions& options);

// Random closed term over the sequence dilator with derivative size at
// most `budget`.
Token RandomOmegaTerm(std::mt19937_64& rng, std::size_t budget);

// translate agrees with the derivative order on all closed terms up to
// `bound` (every pair) and on `random_pairs` random larger terms.
SuiteReport OracleSuite(std::size_t bound, std::size_t random_pairs, std::size_t random_budget,
                        std::uint64_t seed);

// eta and its inverse are mutually inverse order isomorphisms for n <= max_n.
SuiteReport EtaSuite(const Dilator& t, std::size_t max_n, std::size_t bound);

// zeta round trip, support identity and order agreement over finite X of
// size <= max_k.
SuiteReport ZetaSuite(const Dilator& outer, const Dilator& inner, std::size_t max_k,
                      std::size_t bound);

// The universal morphism into (dT, collapse) is the identity.
SuiteReport UniversalIdentitySuite(const Dilator& t, std::size_t max_n, std::size_t bound);

// The universal morphism from d(segment) into (zplus, shift) is a morphism
// of upper derivatives.
SuiteReport UniversalZPlusSuite(std::size_t max_n, std::size_t bound);

// The derivative of the segment dilator has exactly the mu terms.
SuiteReport SegmentDerivativeSuite(std::size_t max_n, std::size_t bound);

struct SuiteConfig {
  std::size_t bound = 7;         // size bound for derivative terms
  std::size_t max_n = 2;
  std::size_t samples = 2'000;   // per randomized law
  std::uint64_t seed = kDefaultSeed;
};

// "small" or a positive integer; DomainError otherwise.
SuiteConfig ConfigForBound(const std::string& bound, std::uint64_t seed);

std::vector<SuiteReport> RunAllSuites(const SuiteConfig& config);

}  // namespace dilator

#endif  // DILATOR_SUITES_HPP_
