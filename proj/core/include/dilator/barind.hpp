// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// From an X-indexed family of trees to dilators: the tree dilators H[x],
// the normal dilator F over the family, the presentation F_Z of D^F_Z, and
// the embedding J of the dependent sum of the trees into D^G_X for an
// upper derivative (G, xi) of F.
//
// Token shapes:
//   family element      (pair x (seq s0 s1 ...))
//   H[x]_n              (seq (pair e0 s0) (pair e1 s1) ...), e_j = bot or j < n
//   H[bot]_n            star
//   F_n                 (triple N x tau), x = bot or an element of X
//   F_Z                 (fz z x (ext (set ...) tau))
//
// Elements of the family are coded by naturals as
//   code(<x, s>) = CantorPair(index of x in X, SequenceCode(s)),
// so the code of <x, s> is at least the length of s.

#ifndef DILATOR_BARIND_HPP_
#define DILATOR_BARIND_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "dilator/compose.hpp"
#include "dilator/extension.hpp"
#include "dilator/praedil.hpp"

namespace dilator {

using NatSeq = std::vector<std::uint64_t>;

// A finite order X with one tree of natural sequences per element.
class TreeFamily {
 public:
  // Trees are given by their listed nodes. DomainError unless every tree
  // is closed under prefixes and every key is an element.
  TreeFamily(std::vector<Token> elements, std::map<Token, std::vector<NatSeq>> trees);

  // {"order": [...], "trees": {"x": [[...], ...]}}; element names are read
  // as tokens. ParseError on malformed input.
  static TreeFamily FromJson(const std::string& text);

  const OrderRef& order() const { return order_; }
  std::span<const Token> elements() const { return elements_; }
  std::size_t index_of(const Token& x) const;

  bool contains(std::size_t x_index, std::span<const std::uint64_t> seq) const;
  // Nodes of one tree, ascending in the Kleene-Brouwer order.
  std::span<const NatSeq> tree(std::size_t x_index) const { return trees_[x_index]; }

  // Elements <x, s> of the dependent sum, as tokens, ascending.
  std::vector<Token> SumElements() const;
  // Family elements whose first component lies below x, ascending.
  std::vector<Token> SumElementsBelow(const Token& x) const;
  Ordering SumCompare(const Token& a, const Token& b) const;
  OrderRef SumOrder() const;

  std::uint64_t Code(const Token& element) const;
  // The element with this code, if there is one.
  std::optional<Token> Decode(std::uint64_t code) const;

 private:
  std::vector<Token> elements_;
  OrderRef order_;
  std::vector<std::vector<NatSeq>> trees_;
  std::vector<std::set<NatSeq>> lookup_;
};

Token SumElement(const Token& x, std::span<const std::uint64_t> seq);
NatSeq SumSequence(const Token& element);

// H[x]. DomainError when x is not an element. H[bot] is StarDilator().
Dilator TreeDilator(std::shared_ptr<const TreeFamily> family, const Token& x);

// Reading of <a, tau> in D^{H[x]}_Z as a sequence over Z^bot x N, and the
// Kleene-Brouwer comparison of those readings.
Token TreeAlternative(const ExtTerm& term);
Ordering TreeAlternativeCompare(const LinearOrder& z, const ExtTerm& a, const ExtTerm& b);

// The finite approximation token E(<x, s>) in H[x]_k, k the number of
// positions below len(s) that code elements below x. DomainError when s is
// not in the tree at x.
Token FiniteApproximation(const TreeFamily& family, const Token& element);
// The coded positions of s (ascending position) that denote elements
// below x.
std::vector<std::uint64_t> CodedPositions(const TreeFamily& family, const Token& element);

// F over the family: triples ordered lexicographically, normal with
// mu(n, N) = (triple N bot star).
Dilator FamilyDilator(std::shared_ptr<const TreeFamily> family);

// Everything J needs, built once per family.
struct FamilyDilators {
  std::shared_ptr<const TreeFamily> family;
  Dilator f;
  std::map<Token, Dilator> h;  // by element of X, plus bot

  const PraeDilator& H(const Token& x) const;
};

FamilyDilators MakeFamilyDilators(std::shared_ptr<const TreeFamily> family);

// chi: F_Z -> D^F_Z and back. F_Z elements use the (fz ...) shape.
// DomainError on invalid input, including a parameter set not below z.
ExtTerm ChiF(const FamilyDilators& bundle, const LinearOrder& z, const Token& fz);
Token ChiFInverse(const FamilyDilators& bundle, const LinearOrder& z, const ExtTerm& term);
bool FzMember(const FamilyDilators& bundle, const LinearOrder& z, const Token& fz);
Ordering FzCompare(const FamilyDilators& bundle, const LinearOrder& z, const Token& a,
                   const Token& b);

// J into D^G_X for a certified upper derivative (G, xi) of bundle.f.
// Values are memoized; safe for concurrent use.
class TreeEmbedding {
 public:
  // ContractError unless the target's base is bundle.f.
  TreeEmbedding(FamilyDilators bundle, CertifiedUpperDerivative target);

  ExtTerm operator()(const Token& element) const;
  // D^{mu^G}_X(x).
  ExtTerm MuOf(const Token& x) const;
  Ordering Compare(const ExtTerm& a, const ExtTerm& b) const;

  const FamilyDilators& bundle() const { return bundle_; }
  const UpperDerivative& target() const { return target_.get(); }

 private:
  ExtTerm Compute(const Token& element) const;

  FamilyDilators bundle_;
  CertifiedUpperDerivative target_;
  mutable std::mutex mu_;
  mutable std::map<Token, ExtTerm> memo_;
};

// (dF, collapse), certified at (max_n, bound).
CertifiedUpperDerivative DefaultFamilyTarget(const FamilyDilators& bundle, std::size_t max_n = 2,
                                             std::size_t bound = 4);

// Order preservation over all pairs of family elements, the bound
// J(<y, s>) < mu(x) for y < x, and injectivity.
SuiteReport CheckTreeEmbedding(const TreeEmbedding& j);

// Exhaustive: the dependent sum of a finite family is well-founded iff
// every tree is (here always, the trees being finite), decided by a
// topological sort of the listed elements.
SuiteReport CheckFamilyWellFounded(const TreeFamily& family);

}  // namespace dilator

#endif  // DILATOR_BARIND_HPP_
