// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Ordinals below epsilon_0 in hereditary Cantor normal form, and the
// reading of closed derivative terms over the sequence dilator as such
// ordinals. Used as an independent check of the derivative order.

#ifndef DILATOR_ORACLE_HPP_
#define DILATOR_ORACLE_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dilator/token.hpp"

namespace dilator {

// omega^{e0} + omega^{e1} + ... with e0 >= e1 >= ...; no terms is 0.
class CnfOrdinal {
 public:
  CnfOrdinal() = default;
  // DomainError unless the exponents are weakly decreasing.
  explicit CnfOrdinal(std::vector<CnfOrdinal> exponents);

  static CnfOrdinal Finite(std::uint64_t k);
  static CnfOrdinal OmegaPower(CnfOrdinal exponent);

  const std::vector<CnfOrdinal>& exponents() const { return exponents_; }
  bool is_zero() const { return exponents_.empty(); }
  // Readable form, e.g. "w^w*2 + w + 3", or with unicode omega when asked.
  std::string str(bool unicode = false) const;

  friend bool operator==(const CnfOrdinal&, const CnfOrdinal&) = default;
  friend std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b);

 private:
  std::vector<CnfOrdinal> exponents_;
};

std::strong_ordering CnfCompare(const CnfOrdinal& a, const CnfOrdinal& b);

// (xi (set a0 a1 ...) (seq n0 n1 ...)) reads as the sum of omega^{a[n_i]}.
// DomainError on (mu m) leaves, on malformed terms, and when the sum is not
// in normal form.
CnfOrdinal TranslateTerm(const Token& term);

}  // namespace dilator

#endif  // DILATOR_ORACLE_HPP_
