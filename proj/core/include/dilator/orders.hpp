// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Finite embeddings n -> m, finite sets under an order, behavioral linear
// orders and their combinators, the Kleene-Brouwer order, and the sequence
// code used to index tree families.

#ifndef DILATOR_ORDERS_HPP_
#define DILATOR_ORDERS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dilator/token.hpp"

namespace dilator {

// A finite subset of the natural number n = {0, ..., n-1}, ascending.
using IndexSet = std::vector<std::size_t>;

// Strictly increasing map {0..domain_size-1} -> {0..codomain_size-1}.
class FinEmbedding {
 public:
  // Throws DomainError unless values are strictly increasing and < codomain.
  FinEmbedding(std::size_t codomain_size, std::vector<std::size_t> values);

  static FinEmbedding Identity(std::size_t n);
  // The increasing enumeration of `range` followed by its inclusion into
  // codomain_size; this is the map usually written as the composite of
  // inclusion and enumeration.
  static FinEmbedding FromRange(std::size_t codomain_size, IndexSet range);

  std::size_t domain_size() const { return values_.size(); }
  std::size_t codomain_size() const { return codomain_; }
  std::span<const std::size_t> values() const { return values_; }
  std::size_t operator()(std::size_t i) const;

  // (*this) followed by `next`, i.e. next o this.
  FinEmbedding Then(const FinEmbedding& next) const;
  std::optional<std::size_t> Preimage(std::size_t v) const;
  // The restriction to {0..n-1}, with codomain f(n); requires n < domain.
  FinEmbedding RestrictBelow(std::size_t n) const;
  bool IsIdentity() const;

  friend bool operator==(const FinEmbedding&, const FinEmbedding&) = default;

 private:
  std::size_t codomain_;
  std::vector<std::size_t> values_;
};

// All strictly increasing maps n -> m, in lexicographic order of values.
std::vector<FinEmbedding> AllEmbeddings(std::size_t n, std::size_t m);

// f[a] for a subset of f's domain; DomainError on out-of-domain elements.
IndexSet FinsubsetImage(const FinEmbedding& f, std::span<const std::size_t> a);

// True iff every element of a is < bound.
bool AllBelow(std::span<const std::size_t> a, std::size_t bound);

using Ordering = std::strong_ordering;

// A countable linear order given behaviorally.
struct LinearOrder {
  std::string name;
  std::function<bool(const Token&)> valid;
  std::function<Ordering(const Token&, const Token&)> compare;
  // Optional: the first `count` elements in increasing order. Only present
  // for orders whose every element has finite rank.
  std::function<std::vector<Token>(std::size_t count)> enumerate_prefix;
  // Present for finite orders.
  std::optional<std::size_t> cardinality;

  bool less(const Token& a, const Token& b) const { return compare(a, b) < 0; }
  bool can_enumerate() const { return static_cast<bool>(enumerate_prefix); }
};

using OrderRef = std::shared_ptr<const LinearOrder>;

// Tokens Int(0), Int(1), ...
OrderRef Naturals();
// Tokens Int(0) .. Int(n-1).
OrderRef FiniteOrder(std::size_t n);
// A finite order listed in increasing order by arbitrary distinct tokens.
OrderRef ListedOrder(std::string name, std::vector<Token> ascending);

// bot below every element of x.
OrderRef AdjoinBottom(OrderRef x);
// top above every element of x.
OrderRef AdjoinTop(OrderRef x);
// (pair x y), lexicographic with the first component deciding.
OrderRef Product(OrderRef x, OrderRef y);
// (pair x y) with y drawn from family(x); first component decides.
OrderRef DependentSum(OrderRef x, std::function<OrderRef(const Token&)> family);
// Elements strictly below bound.
OrderRef RestrictBelow(OrderRef x, Token bound);

// Finite sets under an order, stored ascending.

// Sorts and checks for duplicates (DomainError on duplicates or on tokens
// the order rejects).
std::vector<Token> CanonicalSet(const LinearOrder& order, std::vector<Token> elements);
bool IsStrictlyAscending(const LinearOrder& order, std::span<const Token> elements);

// Result of merging two ascending sets a, b into c = a u b.
struct SetUnion {
  std::vector<Token> elements;
  FinEmbedding left;   // |a| -> |c|
  FinEmbedding right;  // |b| -> |c|
};

template <class Compare>
SetUnion MergeSets(std::span<const Token> a, std::span<const Token> b, Compare&& cmp) {
  std::vector<Token> c;
  std::vector<std::size_t> left, right;
  c.reserve(a.size() + b.size());
  left.reserve(a.size());
  right.reserve(b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      left.push_back(c.size());
      c.push_back(a[i++]);
    } else if (i == a.size()) {
      right.push_back(c.size());
      c.push_back(b[j++]);
    } else {
      Ordering o = cmp(a[i], b[j]);
      if (o < 0) {
        left.push_back(c.size());
        c.push_back(a[i++]);
      } else if (o > 0) {
        right.push_back(c.size());
        c.push_back(b[j++]);
      } else {
        left.push_back(c.size());
        right.push_back(c.size());
        c.push_back(a[i++]);
        ++j;
      }
    }
  }
  std::size_t size = c.size();
  return SetUnion{std::move(c), FinEmbedding(size, std::move(left)),
                  FinEmbedding(size, std::move(right))};
}

// The embedding |a| -> |b| induced by a subset a of b; both ascending.
FinEmbedding AbsOfEmbedding(std::span<const Token> a, std::span<const Token> b,
                            const LinearOrder& order);

// Each element of a is below some element of b (resp. at most).
bool FinLess(std::span<const Token> a, std::span<const Token> b, const LinearOrder& order);
bool FinLessEq(std::span<const Token> a, std::span<const Token> b, const LinearOrder& order);
// Each element of a is below x.
bool FinBelow(std::span<const Token> a, const Token& x, const LinearOrder& order);

// Kleene-Brouwer order on (seq ...) tokens over `base`: a proper end
// extension is smaller, otherwise the first difference decides.
Ordering KbCompare(const LinearOrder& base, const Token& s, const Token& t);
OrderRef KleeneBrouwer(OrderRef base);

// Sequence codes. CantorPair is the usual bijection N x N -> N. The code of
// a sequence of naturals is
//   code(<>) = 0,  code(s ^ <v>) = CantorPair(code(s), v) + 1,
// a bijection between finite sequences and N with code(s) >= length(s).
// All functions throw DomainError on 64-bit overflow.
std::uint64_t CantorPair(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> CantorUnpair(std::uint64_t z);
std::uint64_t SequenceCode(std::span<const std::uint64_t> seq);
std::vector<std::uint64_t> SequenceDecode(std::uint64_t code);

// Kahn's algorithm over the strict relation `less` restricted to `pool`.
// Returns the pool in a linear extension of `less`, or nullopt if the
// relation has a cycle on the pool.
std::optional<std::vector<Token>> TopologicalSort(
    std::span<const Token> pool, const std::function<bool(const Token&, const Token&)>& less);

}  // namespace dilator

#endif  // DILATOR_ORDERS_HPP_
