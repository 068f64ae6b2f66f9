// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "dilator/derivative.hpp"
#include "dilator/errors.hpp"
#include "dilator/heights.hpp"
#include "dilator/suites.hpp"

namespace dilator {
namespace {

ExtTerm E(const char* text) { return ExtTerm::FromToken(Token::Parse(text)); }

TEST(Height, Examples) {
  EXPECT_EQ(DerivHeight(MuTerm(7)), 0u);
  EXPECT_EQ(DerivHeight(Token::Parse("(xi (set) (seq))")), 1u);
  EXPECT_EQ(DerivHeight(Token::Parse("(xi (set (xi (set) (seq))) (seq 0))")), 2u);
  EXPECT_EQ(DerivHeight(Token::Parse("(xi (set (xi (set) (seq)) (mu 0)) (seq 1 0))")), 1u);
}

TEST(SegmentMember, Examples) {
  Dilator d = Derivative(OmegaDilator());
  OrderRef two = FiniteOrder(2);
  const ExtTerm zero = E("(ext (set) (xi (set) (seq)))");
  const ExtTerm mu0 = E("(ext (set 0) (mu 0))");
  EXPECT_TRUE(SegmentMember(*d, *two, {Token::Int(1), 0, mu0}));
  EXPECT_FALSE(SegmentMember(*d, *two, {Token::Int(0), 5, mu0}));
  // Below 1, the empty parameter set is already below 0.
  EXPECT_TRUE(SegmentMember(*d, *two, {Token::Int(1), 0, zero}));
  EXPECT_FALSE(SegmentMember(*d, *two, {Token::Int(0), 0, zero}));
  EXPECT_TRUE(SegmentMember(*d, *two, {Token::Int(0), 1, zero}));
  EXPECT_TRUE(BelowElement(*two, Token::Int(1), mu0));
  EXPECT_FALSE(BelowElement(*two, Token::Int(0), mu0));
}

TEST(SegmentMember, Errors) {
  Dilator d = Derivative(OmegaDilator());
  const ExtTerm mu0 = E("(ext (set 0) (mu 0))");
  EXPECT_THROW(SegmentMember(*d, *Naturals(), {Token::Int(1), 0, mu0}), CapabilityError);
  EXPECT_THROW(SegmentMember(*d, *FiniteOrder(2), {Token::Int(1), 0, E("(ext (set 0) (mu 1))")}),
               DomainError);
}

TEST(HeightSuite, Passes) {
  HeightSuiteOptions options;
  options.samples = 10000;
  SuiteReport r = DerivHeightSuite(OmegaDilator(), options);
  EXPECT_TRUE(r.pass()) << Summary(r);
  EXPECT_GT(r.checks, 10000u);
}

}  // namespace
}  // namespace dilator
