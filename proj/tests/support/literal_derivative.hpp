// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Test oracle: the derivative order written as a direct transcription of
// its case definition, with existential and universal quantifiers over
// member sets and an explicit linearity check on the union. Slow on
// purpose; shares no code with the library comparator beyond T itself.

#ifndef DILATOR_TESTS_SUPPORT_LITERAL_DERIVATIVE_HPP_
#define DILATOR_TESTS_SUPPORT_LITERAL_DERIVATIVE_HPP_

#include <algorithm>
#include <vector>

#include "dilator/orders.hpp"
#include "dilator/praedil.hpp"
#include "dilator/token.hpp"

namespace dilator::testing {

class LiteralDerivativeOrder {
 public:
  explicit LiteralDerivativeOrder(const PraeDilator& t) : t_(t) {}

  bool Less(const Token& s, const Token& u) const {
    if (IsMu(s)) {
      if (IsMu(u)) return Index(s) < Index(u);
      const auto b = Members(u);
      return std::any_of(b.begin(), b.end(), [&](const Token& r) { return s == r || Less(s, r); });
    }
    const auto a = Members(s);
    if (IsMu(u)) return std::all_of(a.begin(), a.end(), [&](const Token& r) { return Less(r, u); });
    const auto b = Members(u);
    std::vector<Token> c;
    for (const Token& r : a) {
      if (std::find(c.begin(), c.end(), r) == c.end()) c.push_back(r);
    }
    for (const Token& r : b) {
      if (std::find(c.begin(), c.end(), r) == c.end()) c.push_back(r);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (Less(c[i], c[i])) return false;
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (Less(c[i], c[j]) == Less(c[j], c[i])) return false;
      }
    }
    // Insertion sort by the (now known linear) restriction.
    for (std::size_t i = 1; i < c.size(); ++i) {
      for (std::size_t j = i; j > 0 && Less(c[j], c[j - 1]); --j) std::swap(c[j], c[j - 1]);
    }
    return t_.compare(c.size(), t_.map(Abs(a, c), Token_(s)), t_.map(Abs(b, c), Token_(u))) < 0;
  }

 private:
  static bool IsMu(const Token& s) { return s.is_tagged("mu"); }
  static std::size_t Index(const Token& s) { return static_cast<std::size_t>(s.arg(0).as_int()); }
  static std::vector<Token> Members(const Token& s) {
    auto m = s.arg(0).args();
    return {m.begin(), m.end()};
  }
  static const Token& Token_(const Token& s) { return s.arg(1); }

  // |iota_a^c| read off positions; requires a listed ascending.
  FinEmbedding Abs(const std::vector<Token>& a, const std::vector<Token>& c) const {
    std::vector<std::size_t> values;
    for (const Token& r : a) {
      values.push_back(static_cast<std::size_t>(std::find(c.begin(), c.end(), r) - c.begin()));
    }
    std::sort(values.begin(), values.end());
    return FinEmbedding(c.size(), values);
  }

  const PraeDilator& t_;
};

}  // namespace dilator::testing

#endif  // DILATOR_TESTS_SUPPORT_LITERAL_DERIVATIVE_HPP_
