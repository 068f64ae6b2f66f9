// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Coded prae-dilators: functors from the finite orders n (with strictly
// increasing maps) to linear orders, with natural finite supports. A
// PraeDilator is a record of functions over Tokens; nothing is tabulated.

#ifndef DILATOR_PRAEDIL_HPP_
#define DILATOR_PRAEDIL_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dilator/orders.hpp"
#include "dilator/report.hpp"
#include "dilator/token.hpp"

namespace dilator {

struct PraeDilator {
  std::string name;

  // Is sigma an element of T_n?
  std::function<bool(std::size_t n, const Token& sigma)> member;
  // Linear order on T_n; arguments must be members.
  std::function<Ordering(std::size_t n, const Token& a, const Token& b)> compare;
  // T_f for f : n -> m, applied to sigma in T_n.
  std::function<Token(const FinEmbedding& f, const Token& sigma)> map;
  // Support of sigma in T_n, ascending.
  std::function<IndexSet(std::size_t n, const Token& sigma)> supp;
  // For sigma in T_m with supp(sigma) inside rng(f), the unique sigma0 with
  // map(f, sigma0) == sigma. DomainError when the support is not covered.
  std::function<Token(const FinEmbedding& f, const Token& sigma)> pullback;
  // Size measure used by `enumerate`.
  std::function<std::size_t(const Token& sigma)> size;

  // Optional: every member of T_n with size <= bound, each once, ascending.
  std::function<std::vector<Token>(std::size_t n, std::size_t bound)> enumerate;
  // Optional normal structure: mu(n, m) in T_n for m < n.
  std::function<Token(std::size_t n, std::size_t m)> mu;

  bool is_normal() const { return static_cast<bool>(mu); }
  bool can_enumerate() const { return static_cast<bool>(enumerate); }

  // Capability-checked wrappers.
  std::vector<Token> Members(std::size_t n, std::size_t bound) const;
  Token Mu(std::size_t n, std::size_t m) const;
  bool Less(std::size_t n, const Token& a, const Token& b) const { return compare(n, a, b) < 0; }
};

using Dilator = std::shared_ptr<const PraeDilator>;

// T_n as a LinearOrder (no enumeration).
OrderRef DilatorOrder(const Dilator& t, std::size_t n);

// Built-ins. Size measures are documented next to each.

// Weakly decreasing sequences (seq n0 n1 ...) with entries < n, ordered
// lexicographically (a proper prefix is smaller). mu(n, m) = (seq m).
// Size: sequence length.
Dilator OmegaDilator();
// Elements 0..n-1 and the symbol Omega above them; Omega has empty support
// and is fixed by every map. Size: 1.
Dilator BumpDilator();
// Elements 0..n-1, T_f = f, supp(m) = {m}, mu(n, m) = m. Size: 1.
Dilator SegmentDilator();
// A copy of the integers below the finite part 0..n-1; integer p is the
// token (z p). supp(z p) is empty; mu(n, m) = m.
// Size: 1 for m, 1 + |p| for (z p).
Dilator ZPlusDilator();
// One element `star` with empty support. Size: 0.
Dilator StarDilator();

Token ZToken(std::int64_t p);

// Exhaustive law checks for all n <= max_n over members of size <= bound.
// Laws: member, linear order, functor identity and composition, embedding,
// support naturality, support condition, pullback.
SuiteReport CheckPraeDilatorLaws(const Dilator& t, std::size_t max_n, std::size_t bound);

// Normality: mu(n, .) embedding into T_n, naturality, the equivalence
// sigma < mu(n, m) iff supp(sigma) < m, supp(mu(n, m)) = {m}, and support
// monotonicity (sigma <= tau implies supp(sigma) <=fin supp(tau)).
SuiteReport CheckNormality(const Dilator& t, std::size_t max_n, std::size_t bound);

// Helpers shared by the other modules.
bool IndexSetFinLessEq(std::span<const std::size_t> a, std::span<const std::size_t> b);
IndexSet UnionOf(std::span<const IndexSet> sets);
std::string IndexSetString(std::span<const std::size_t> a);

}  // namespace dilator

#endif  // DILATOR_PRAEDIL_HPP_
