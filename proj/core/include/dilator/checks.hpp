// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive order checks shared by the validators.

#ifndef DILATOR_CHECKS_HPP_
#define DILATOR_CHECKS_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dilator/orders.hpp"
#include "dilator/report.hpp"
#include "dilator/token.hpp"

namespace dilator {

using TokenCompare = std::function<Ordering(const Token&, const Token&)>;

// Stable merge sort that stays in bounds for any comparator, including
// inconsistent ones under test.
void SafeSort(std::vector<Token>& tokens, const TokenCompare& cmp);

// Verifies that cmp is a strict total order on `pool` whose equality is
// structural: irreflexivity, trichotomy and transitivity over every pair.
// Sorting first reduces transitivity to a check that every pair (i < j) of
// the sorted list compares less in both directions consistently. Laws are
// reported as "<prefix>irreflexive", "<prefix>trichotomy",
// "<prefix>transitive" and "<prefix>duplicate".
void CheckStrictTotalOrder(std::span<const Token> pool, const TokenCompare& cmp, std::size_t n,
                           SuiteReport& report, const std::string& prefix = "");

std::vector<std::string> Witness(std::initializer_list<Token> tokens);
std::vector<std::string> Witness(std::span<const Token> tokens);

}  // namespace dilator

#endif  // DILATOR_CHECKS_HPP_
