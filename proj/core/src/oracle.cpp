// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/oracle.hpp"

#include "dilator/derivative.hpp"
#include "dilator/errors.hpp"

namespace dilator {

std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b) {
  const auto& x = a.exponents_;
  const auto& y = b.exponents_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return x.size() <=> y.size();
}

std::strong_ordering CnfCompare(const CnfOrdinal& a, const CnfOrdinal& b) { return a <=> b; }

CnfOrdinal::CnfOrdinal(std::vector<CnfOrdinal> exponents) : exponents_(std::move(exponents)) {
  for (std::size_t i = 1; i < exponents_.size(); ++i) {
    if (exponents_[i - 1] < exponents_[i]) {
      throw DomainError("exponents are not weakly decreasing: " + exponents_[i - 1].str() + " < " +
                        exponents_[i].str());
    }
  }
}

CnfOrdinal CnfOrdinal::Finite(std::uint64_t k) {
  return CnfOrdinal(std::vector<CnfOrdinal>(k, CnfOrdinal()));
}

CnfOrdinal CnfOrdinal::OmegaPower(CnfOrdinal exponent) {
  return CnfOrdinal(std::vector<CnfOrdinal>{std::move(exponent)});
}

std::string CnfOrdinal::str(bool unicode) const {
  if (exponents_.empty()) return "0";
  const std::string w = unicode ? "ω" : "w";
  std::string out;
  std::size_t i = 0;
  while (i < exponents_.size()) {
    std::size_t j = i;
    while (j < exponents_.size() && exponents_[j] == exponents_[i]) ++j;
    const std::size_t count = j - i;
    const CnfOrdinal& e = exponents_[i];
    if (!out.empty()) out += " + ";
    if (e.is_zero()) {
      out += std::to_string(count);
    } else {
      out += w;
      if (e != Finite(1)) {
        std::string inner = e.str(unicode);
        bool simple = e.exponents_.size() == 1 && e.exponents_[0] == Finite(1);
        bool finite = true;
        for (const CnfOrdinal& x : e.exponents_) finite = finite && x.is_zero();
        out += "^" + (simple || finite ? inner : "(" + inner + ")");
      }
      if (count > 1) out += (unicode ? "·" : "*") + std::to_string(count);
    }
    i = j;
  }
  return out;
}

CnfOrdinal TranslateTerm(const Token& term) {
  if (IsMuTerm(term)) throw DomainError("terms with (mu m) leaves have no reading: " + term.str());
  auto members = XiMembers(term);
  const Token& sigma = XiToken(term);
  if (!sigma.is_tagged("seq")) throw DomainError("expected a (seq ...) token in " + term.str());
  std::vector<CnfOrdinal> readings;
  readings.reserve(members.size());
  for (const Token& r : members) readings.push_back(TranslateTerm(r));
  std::vector<CnfOrdinal> exponents;
  for (const Token& e : sigma.args()) {
    if (!e.is_int() || e.as_int() < 0 || static_cast<std::size_t>(e.as_int()) >= readings.size()) {
      throw DomainError("sequence entry " + e.str() + " out of range in " + term.str());
    }
    exponents.push_back(readings[static_cast<std::size_t>(e.as_int())]);
  }
  return CnfOrdinal(std::move(exponents));
}

}  // namespace dilator
