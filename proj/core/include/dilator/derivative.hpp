// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The derivative term system of a normal prae-dilator T. Terms:
//   (mu m)                    m < n
//   (xi (set r0 r1 ...) tok)  members ascending under the derivative order,
//                             tok a full-support member of T_k, k = #members
// The term (xi (set (mu m)) mu^T(1, 0)) is excluded; it would denote the
// same point as (mu m).

#ifndef DILATOR_DERIVATIVE_HPP_
#define DILATOR_DERIVATIVE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "dilator/compose.hpp"
#include "dilator/extension.hpp"
#include "dilator/praedil.hpp"

namespace dilator {

Token MuTerm(std::size_t m);
// No validation; `members` must already be ascending.
Token XiTerm(std::vector<Token> members, Token sigma);

bool IsMuTerm(const Token& s);
bool IsXiTerm(const Token& s);
std::size_t MuIndex(const Token& s);
std::span<const Token> XiMembers(const Token& s);
const Token& XiToken(const Token& s);

// Full recursive validity check in the term system over n. Never throws.
bool DerivMember(const PraeDilator& t, std::size_t n, const Token& s);

// The derivative order on valid terms. Equal exactly when structurally
// equal. A mu term lies below a xi term iff it is <= some member, and a xi
// term lies below a mu term iff all members are below it; two xi terms are
// compared in T after pushing both into the union of their member sets.
Ordering DerivCompare(const PraeDilator& t, const Token& s, const Token& u);

// Size measure: 1 for (mu m), 1 + sum of member sizes + size^T(tok) for xi.
std::size_t DerivSize(const PraeDilator& t, const Token& s);
// max(size, 1 + sum of 2 * length(member)) for xi, size for mu.
std::size_t DerivLength(const PraeDilator& t, const Token& s);

Token DerivMap(const FinEmbedding& f, const Token& s);
// DomainError when some (mu m) has m outside the range of f.
Token DerivPullback(const FinEmbedding& f, const Token& s);
IndexSet DerivSupp(const Token& s);

// Height: 0 for mu, 1 for xi with no members, else one more than the
// height of the largest member.
std::size_t DerivHeight(const Token& s);

// Packages the term system as a normal prae-dilator named "d:<name>".
// Enumeration runs closure rounds over T's enumeration; without it the
// result has no enumerate capability. CapabilityError unless T is normal.
Dilator Derivative(const Dilator& t);

// The collapse T o dT => dT and its inverse. Inputs are (ext (set ...) tok)
// tokens of the composite at n; DomainError on tokens of the wrong shape.
Token XiCollapse(const PraeDilator& t, const Token& ext);
Token XiExpand(const PraeDilator& t, const Token& s);

// (dT, collapse) as an upper derivative of T.
UpperDerivative DerivativeUpperDerivative(const Dilator& t);

// The unique morphism from dT into a certified upper derivative (S, xi') of
// the same T: (mu m) goes to mu^S(n, m) and xi<a, tok> to xi'<image of a, tok>.
// ContractError when the target's base is not `t`.
Morphism UniversalMorphism(const Dilator& t, const CertifiedUpperDerivative& target);

}  // namespace dilator

#endif  // DILATOR_DERIVATIVE_HPP_
