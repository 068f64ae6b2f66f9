// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/heights.hpp"

#include "dilator/derivative.hpp"
#include "dilator/errors.hpp"

namespace dilator {

bool BelowElement(const LinearOrder& x_order, const Token& x, const ExtTerm& term) {
  return FinBelow(term.support, x, x_order);
}

bool SegmentMember(const PraeDilator& deriv, const LinearOrder& x_order, const SegmentQuery& q) {
  if (!x_order.cardinality || !x_order.can_enumerate()) {
    throw CapabilityError("height segments need a finite enumerable order, got " + x_order.name);
  }
  if (!x_order.valid(q.x)) throw DomainError(q.x.str() + " is not an element of " + x_order.name);
  if (!ExtMember(deriv, x_order, q.term)) {
    throw DomainError("invalid extension term " + q.term.ToToken().str());
  }
  for (const Token& y : x_order.enumerate_prefix(*x_order.cardinality)) {
    if (!x_order.less(y, q.x)) break;
    if (BelowElement(x_order, y, q.term)) return true;
  }
  return BelowElement(x_order, q.x, q.term) && DerivHeight(q.term.token) <= q.k;
}

}  // namespace dilator
