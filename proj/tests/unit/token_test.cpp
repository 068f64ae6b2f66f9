// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "dilator/errors.hpp"
#include "dilator/token.hpp"

namespace dilator {
namespace {

TEST(Token, ParsesAtomsAndLists) {
  Token t = Token::Parse("(pair x (seq 0 -5))");
  ASSERT_TRUE(t.is_tagged("pair", 2));
  EXPECT_TRUE(t.arg(0).is_sym("x"));
  EXPECT_EQ(SeqEntries(t.arg(1))[1].as_int(), -5);
  EXPECT_TRUE(Token::Parse("bot") == Bot());
  EXPECT_TRUE(Token::Parse("()").is_list());
}

TEST(Token, PrintIsCanonical) {
  EXPECT_EQ(Token::Parse("  ( seq   0\n 5 ) ").str(), "(seq 0 5)");
  EXPECT_EQ(Token::Parse("(xi (set) (seq))").str(), "(xi (set) (seq))");
}

TEST(Token, RejectsMalformedInput) {
  for (const char* bad : {"(xi (set", ")", "(a))", "", "1x", "(a b) c", "#"}) {
    EXPECT_THROW(Token::Parse(bad), ParseError) << bad;
  }
}

TEST(Token, AccessorsCheckKind) {
  EXPECT_THROW(Token::Sym("a").as_int(), DomainError);
  EXPECT_THROW(Token::Int(1).as_sym(), DomainError);
  EXPECT_THROW(SeqEntries(Token::Parse("(set 1)")), DomainError);
}

TEST(Token, NodeCountCountsAtomsAndLists) {
  EXPECT_EQ(Token::Int(3).node_count(), 1u);
  EXPECT_EQ(Token::Parse("(seq 0 5)").node_count(), 4u);
}

Token RandomToken(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 2 : 1);
  switch (kind(rng)) {
    case 0: return Token::Int(std::uniform_int_distribution<int>(-50, 50)(rng));
    case 1: return Token::Sym(std::string(1, static_cast<char>('a' + rng() % 26)));
    default: {
      std::vector<Token> items(rng() % 4);
      for (Token& i : items) i = RandomToken(rng, depth - 1);
      return Token::List(std::move(items));
    }
  }
}

TEST(Token, PrintParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Token t = RandomToken(rng, 4);
    const std::string printed = t.str();
    Token back = Token::Parse(printed);
    EXPECT_TRUE(back == t);
    EXPECT_EQ(back.str(), printed);
    EXPECT_EQ(back.hash(), t.hash());
  }
}

}  // namespace
}  // namespace dilator
