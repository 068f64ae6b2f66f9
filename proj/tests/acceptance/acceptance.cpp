// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one [PASS]/[FAIL] line per criterion; nonzero exit when
// any criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "dilator/barind.hpp"
#include "dilator/chain_search.hpp"
#include "dilator/derivative.hpp"
#include "dilator/suites.hpp"
#include "support/literal_derivative.hpp"

namespace dilator {
namespace {

// Pinned thresholds.
constexpr double kLinearitySeconds = 60.0;
constexpr std::size_t kLinearityBound = 9;
constexpr std::size_t kLinearityMaxN = 2;
constexpr std::size_t kExpectedOmegaTerms = 1000;
constexpr std::size_t kSupplementBound = 11;
constexpr std::size_t kSegmentMaxN = 5;
constexpr std::size_t kSegmentBound = 16;
constexpr std::size_t kOracleBound = 9;
constexpr std::size_t kOracleRandomPairs = 10'000;
constexpr std::size_t kOracleRandomBudget = 24;
constexpr std::size_t kEtaMaxN = 4;
constexpr std::size_t kEtaBound = 6;
constexpr std::size_t kZetaMaxK = 3;
constexpr std::size_t kZetaBound = 6;
constexpr std::size_t kEqualizerMaxN = 2;
constexpr std::size_t kEqualizerBound = 9;
constexpr std::size_t kUniversalMaxN = 3;
constexpr std::size_t kUniversalBound = 8;
constexpr double kFamilySeconds = 120.0;
constexpr std::size_t kFamilyMaxNodes = 15;
constexpr std::size_t kHeightSamples = 10'000;
constexpr std::size_t kSegmentTriples = 1'000;
constexpr double kChainSeconds = 1.0;
constexpr std::size_t kChainDepth = 10;
constexpr std::size_t kControlDepth = 50;
constexpr std::size_t kControlBound = 9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

std::string Fixed(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << v;
  return os.str();
}

std::string Checks(const SuiteReport& r) {
  return std::to_string(r.checks) + " checks, " + std::to_string(r.violation_count) + " violations";
}

// Counts disagreements between the derivative order and a literal reading
// of its case definition.
std::size_t LiteralDisagreements(const Dilator& t, std::size_t max_n, std::size_t bound) {
  testing::LiteralDerivativeOrder literal(*t);
  Dilator d = Derivative(t);
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto terms = d->Members(n, bound);
    for (const Token& s : terms) {
      for (const Token& u : terms) bad += (DerivCompare(*t, s, u) < 0) != literal.Less(s, u);
    }
  }
  return bad;
}

Outcome Linearity() {
  Outcome o;
  std::ostringstream detail;
  auto start = std::chrono::steady_clock::now();
  SuiteReport r("linearity");
  for (const Dilator& t : {OmegaDilator(), SegmentDilator()}) {
    r.Absorb(DerivLinearitySuite(t, kLinearityMaxN, kLinearityBound));
  }
  const double elapsed = Seconds(start);
  std::size_t omega_terms = 0;
  detail << "omega terms at size <= " << kLinearityBound << ":";
  for (std::size_t n = 0; n <= kLinearityMaxN; ++n) {
    std::size_t c = Derivative(OmegaDilator())->Members(n, kLinearityBound).size();
    omega_terms += c;
    detail << " " << c;
  }
  o.pass = r.pass() && elapsed < kLinearitySeconds;
  detail << " (total " << omega_terms << ", expected >= " << kExpectedOmegaTerms << "); "
         << Checks(r) << "; " << Fixed(elapsed) << " s";

  // Supplementary run at a larger bound so that the omega pool exceeds the
  // expected count.
  start = std::chrono::steady_clock::now();
  SuiteReport big = DerivLinearitySuite(OmegaDilator(), kLinearityMaxN, kSupplementBound);
  std::size_t big_terms = 0;
  for (std::size_t n = 0; n <= kLinearityMaxN; ++n) {
    big_terms += Derivative(OmegaDilator())->Members(n, kSupplementBound).size();
  }
  const double big_elapsed = Seconds(start);
  o.pass = o.pass && big.pass() && big_terms >= kExpectedOmegaTerms && big_elapsed < kLinearitySeconds;
  detail << "; size <= " << kSupplementBound << ": " << big_terms << " omega terms, "
         << Checks(big) << ", " << Fixed(big_elapsed) << " s";

  const std::size_t literal = LiteralDisagreements(OmegaDilator(), kLinearityMaxN, kLinearityBound) +
                              LiteralDisagreements(SegmentDilator(), kLinearityMaxN, kLinearityBound);
  o.pass = o.pass && literal == 0;
  detail << "; literal-definition disagreements " << literal;
  o.detail = detail.str();
  return o;
}

Outcome SegmentExactness() {
  SuiteReport r = SegmentDerivativeSuite(kSegmentMaxN, kSegmentBound);
  return {r.pass(), "n <= " + std::to_string(kSegmentMaxN) + ", bounds 1.." +
                        std::to_string(kSegmentBound) + "; " + Checks(r)};
}

Outcome Oracle() {
  SuiteReport r = OracleSuite(kOracleBound, kOracleRandomPairs, kOracleRandomBudget, kDefaultSeed);
  const std::size_t pool = Derivative(OmegaDilator())->Members(0, kOracleBound).size();
  return {r.pass(), std::to_string(pool) + " closed terms exhaustively plus " +
                        std::to_string(kOracleRandomPairs) + " random pairs; " + Checks(r)};
}

Outcome EtaIsomorphism() {
  SuiteReport r("eta");
  for (const Dilator& t : {OmegaDilator(), BumpDilator(), SegmentDilator()}) {
    r.Absorb(EtaSuite(t, kEtaMaxN, kEtaBound));
  }
  return {r.pass(), "omega, bump, segment, n <= " + std::to_string(kEtaMaxN) + "; " + Checks(r)};
}

Outcome ZetaIsomorphism() {
  SuiteReport r = ZetaSuite(OmegaDilator(), OmegaDilator(), kZetaMaxK, kZetaBound);
  return {r.pass(), "omega o omega, |X| <= " + std::to_string(kZetaMaxK) + "; " + Checks(r)};
}

Outcome Equalizer() {
  SuiteReport r = DerivEqualizerSuite(OmegaDilator(), kEqualizerMaxN, kEqualizerBound);
  return {r.pass(), "omega, n <= " + std::to_string(kEqualizerMaxN) + ", size <= " +
                        std::to_string(kEqualizerBound) + "; " + Checks(r)};
}

Outcome Universality() {
  SuiteReport id = UniversalIdentitySuite(OmegaDilator(), kUniversalMaxN, kUniversalBound);
  SuiteReport z = UniversalZPlusSuite(kUniversalMaxN, kUniversalBound);
  return {id.pass() && z.pass(), "identity: " + Checks(id) + "; into zplus: " + Checks(z)};
}

Outcome BarInduction() {
  std::ifstream in(std::string(DILATOR_TEST_DATA) + "/family.json");
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto family = std::make_shared<const TreeFamily>(TreeFamily::FromJson(buffer.str()));
  bool shape = family->elements().size() == 3;
  for (std::size_t i = 0; i < family->elements().size(); ++i) {
    shape = shape && family->tree(i).size() <= kFamilyMaxNodes;
  }
  auto start = std::chrono::steady_clock::now();
  FamilyDilators bundle = MakeFamilyDilators(family);
  TreeEmbedding j(bundle, DefaultFamilyTarget(bundle));
  SuiteReport r = CheckTreeEmbedding(j);
  const double elapsed = Seconds(start);
  return {shape && r.pass() && elapsed < kFamilySeconds,
          std::to_string(family->SumElements().size()) + " family elements; " + Checks(r) + "; " +
              Fixed(elapsed) + " s"};
}

Outcome Heights() {
  HeightSuiteOptions options;
  options.samples = kHeightSamples;
  options.segment_samples = kSegmentTriples;
  SuiteReport r = DerivHeightSuite(OmegaDilator(), options);
  return {r.pass(), std::to_string(kHeightSamples) + " samples, " + std::to_string(kSegmentTriples) +
                        " triples; " + Checks(r)};
}

Outcome NegativeControl() {
  auto start = std::chrono::steady_clock::now();
  ChainResult z = SearchDilatorChain(ZPlusDilator(), 1, kChainDepth, 4 * kChainDepth, ChainBudget{});
  const double elapsed = Seconds(start);
  ChainResult d = SearchDilatorChain(Derivative(OmegaDilator()), 0, kControlDepth, kControlBound,
                                     ChainBudget{});
  std::ostringstream detail;
  detail << "zplus n=1 depth " << kChainDepth << ": " << ToString(z.status) << " in " << Fixed(elapsed)
         << " s";
  if (!z.chain.empty()) detail << " (" << z.chain.front().str() << " .. " << z.chain.back().str() << ")";
  detail << "; derivative of omega n=0 size <= " << kControlBound << " depth " << kControlDepth << ": "
         << ToString(d.status) << " (pool " << d.pool_size << ")";
  return {z.status == ChainStatus::kFound && z.chain.size() == kChainDepth && elapsed < kChainSeconds &&
              d.status == ChainStatus::kNoneInPool,
          detail.str()};
}

}  // namespace
}  // namespace dilator

int main() {
  using dilator::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 derivative order is linear", dilator::Linearity},
      {"C2 segment derivative is exactly its mu terms", dilator::SegmentExactness},
      {"C3 ordinal translation preserves order", dilator::Oracle},
      {"C4 eta is an order isomorphism", dilator::EtaIsomorphism},
      {"C5 zeta round trip and support", dilator::ZetaIsomorphism},
      {"C6 collapse bijection and equalizer", dilator::Equalizer},
      {"C7 universal morphisms", dilator::Universality},
      {"C8 tree family embedding", dilator::BarInduction},
      {"C9 heights and segments", dilator::Heights},
      {"C10 descending chain control", dilator::NegativeControl},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
