// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The extension D^T_X of a prae-dilator T to an arbitrary linear order X.
// An element is a pair <a, sigma>: a finite set a of X-elements and a
// token sigma of T_{|a|} whose support is all of |a|. Token form:
//   (ext (set e0 e1 ...) sigma)

#ifndef DILATOR_EXTENSION_HPP_
#define DILATOR_EXTENSION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dilator/orders.hpp"
#include "dilator/praedil.hpp"
#include "dilator/token.hpp"

namespace dilator {

struct ExtTerm {
  std::vector<Token> support;  // ascending under X
  Token token;

  Token ToToken() const;
  // Shape check only; DomainError if the token is not (ext (set ...) tok).
  static ExtTerm FromToken(const Token& t);

  friend bool operator==(const ExtTerm&, const ExtTerm&) = default;
};

Token ExtToken(std::span<const Token> support, const Token& sigma);

// The uniqueness condition: sigma in T_{|a|} with support exactly |a|.
bool HasFullSupport(const PraeDilator& t, std::size_t k, const Token& sigma);

bool ExtMember(const PraeDilator& t, const LinearOrder& x, const ExtTerm& s);
// False on malformed tokens.
bool ExtMember(const PraeDilator& t, const LinearOrder& x, const Token& candidate);

// Canonicalizes the support and validates; DomainError when invalid.
ExtTerm MakeExt(const PraeDilator& t, const LinearOrder& x, std::vector<Token> support,
                Token sigma);

// Comparison of <a, s> and <b, t> given the element comparison of X:
// merge a and b into c and compare both tokens pushed into T_{|c|}.
template <class Compare>
Ordering ExtCompareWith(const PraeDilator& t, std::span<const Token> a, const Token& s,
                        std::span<const Token> b, const Token& u, Compare&& cmp) {
  SetUnion c = MergeSets(a, b, cmp);
  const std::size_t k = c.elements.size();
  Token left = c.left.IsIdentity() ? s : t.map(c.left, s);
  Token right = c.right.IsIdentity() ? u : t.map(c.right, u);
  return t.compare(k, left, right);
}

// Validating comparison; DomainError on invalid input.
Ordering ExtCompare(const PraeDilator& t, const LinearOrder& x, const ExtTerm& s, const ExtTerm& u);
// Assumes both are valid.
Ordering ExtCompareUnchecked(const PraeDilator& t, const LinearOrder& x, const ExtTerm& s,
                             const ExtTerm& u);

// D^T_X as a linear order on (ext ...) tokens.
OrderRef ExtOrder(const Dilator& t, OrderRef x);

// An order embedding X -> Y, given pointwise with a partial inverse.
struct OrderEmbedding {
  OrderRef source;
  OrderRef target;
  std::function<Token(const Token&)> apply;
  std::function<std::optional<Token>(const Token&)> preimage;
};

OrderEmbedding FiniteEmbedding(const FinEmbedding& f);

// D^T_f; DomainError if f is not order preserving on the support.
ExtTerm ExtMap(const PraeDilator& t, const OrderEmbedding& f, const ExtTerm& s);

// D^T_n -> T_n and back.
Token Eta(const PraeDilator& t, std::size_t n, const ExtTerm& s);
ExtTerm EtaInverse(const PraeDilator& t, std::size_t n, const Token& sigma);

// <{x}, mu(1, 0)>.
ExtTerm MuExt(const PraeDilator& t, const LinearOrder& x, const Token& element);

struct RangePartition {
  // Terms inside the range of D^T_f, each with its preimage over X.
  std::vector<std::pair<ExtTerm, ExtTerm>> in_range;
  std::vector<ExtTerm> outside;
};
RangePartition RangeFilter(const PraeDilator& t, const OrderEmbedding& f,
                           std::span<const ExtTerm> terms);

// Size of <a, sigma>: 1 + sum of element sizes + size(sigma).
std::size_t ExtSize(const PraeDilator& t, const ExtTerm& s,
                    const std::function<std::size_t(const Token&)>& element_size);

// All valid terms over the ascending pool of X-elements with size <= bound.
// Output is not sorted.
std::vector<ExtTerm> ExtEnumerate(const PraeDilator& t, std::span<const Token> pool,
                                  std::size_t bound,
                                  const std::function<std::size_t(const Token&)>& element_size);

// Unit-size elements 0..n-1.
std::vector<ExtTerm> ExtEnumerateFinite(const PraeDilator& t, std::size_t n, std::size_t bound);

// Wraps t so that compare consults a synchronized cache keyed by
// (n, a, b). Safe for concurrent use.
Dilator WithCompareMemo(const Dilator& t, std::size_t max_entries = 1 << 20);

}  // namespace dilator

#endif  // DILATOR_EXTENSION_HPP_
