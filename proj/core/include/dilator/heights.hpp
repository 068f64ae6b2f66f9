// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Approximations of D^{dT}_X from below: the terms whose parameters lie
// below x, and the finer cut that also bounds the height of the token.

#ifndef DILATOR_HEIGHTS_HPP_
#define DILATOR_HEIGHTS_HPP_

#include <cstddef>

#include "dilator/extension.hpp"
#include "dilator/praedil.hpp"

namespace dilator {

struct SegmentQuery {
  Token x;           // element of X
  std::size_t k = 0; // height bound
  ExtTerm term;      // element of D^{dT}_X
};

// <a, s> with every element of a below x.
bool BelowElement(const LinearOrder& x_order, const Token& x, const ExtTerm& term);

// Membership of q.term in the cut at (q.x, q.k): either a is below some
// y < x, or a is below x and the height of s is at most k. X must be finite
// (CapabilityError otherwise); DomainError when q.term is not a valid term
// of `deriv` over X.
bool SegmentMember(const PraeDilator& deriv, const LinearOrder& x_order, const SegmentQuery& q);

}  // namespace dilator

#endif  // DILATOR_HEIGHTS_HPP_
