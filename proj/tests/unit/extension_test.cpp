// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "dilator/checks.hpp"
#include "dilator/errors.hpp"
#include "dilator/extension.hpp"
#include "dilator/praedil.hpp"
#include "support/ordering.hpp"

namespace dilator {
namespace {

Token S(const char* text) { return Token::Parse(text); }
ExtTerm E(const char* text) { return ExtTerm::FromToken(Token::Parse(text)); }

OrderEmbedding Shift(std::int64_t by) {
  return OrderEmbedding{Naturals(), Naturals(), [by](const Token& x) { return Token::Int(x.as_int() + by); },
                        [by](const Token& y) -> std::optional<Token> {
                          if (y.as_int() < by) return std::nullopt;
                          return Token::Int(y.as_int() - by);
                        }};
}

OrderEmbedding Evens() {
  return OrderEmbedding{Naturals(), Naturals(), [](const Token& x) { return Token::Int(2 * x.as_int()); },
                        [](const Token& y) -> std::optional<Token> {
                          if (y.as_int() % 2 != 0) return std::nullopt;
                          return Token::Int(y.as_int() / 2);
                        }};
}

TEST(ExtMember, Examples) {
  Dilator w = OmegaDilator();
  OrderRef nat = Naturals();
  EXPECT_TRUE(ExtMember(*w, *nat, S("(ext (set 2 5) (seq 1 1 0))")));
  EXPECT_FALSE(ExtMember(*w, *nat, S("(ext (set 2 5) (seq 3 3 1))")));
  EXPECT_FALSE(ExtMember(*w, *nat, S("(ext (set 1 2 3) (seq 1 1 0))")));
  EXPECT_FALSE(ExtMember(*w, *nat, S("(ext (set 5 2) (seq 1 0))")));
  EXPECT_FALSE(ExtMember(*w, *nat, S("(garbage)")));
}

TEST(ExtCompare, BumpIsXPlusTop) {
  Dilator b = BumpDilator();
  OrderRef nat = Naturals();
  EXPECT_LT(testing::Sign(ExtCompare(*b, *nat, E("(ext (set 5) 0)"), E("(ext (set) Omega)"))), 0);
  EXPECT_LT(testing::Sign(ExtCompare(*b, *nat, E("(ext (set 2) 0)"), E("(ext (set 5) 0)"))), 0);
  ExtTerm s = E("(ext (set 7) 0)");
  EXPECT_EQ(testing::Sign(ExtCompare(*b, *nat, s, s)), 0);
  EXPECT_THROW(ExtCompare(*b, *nat, E("(ext (set 1 2) 0)"), s), DomainError);
}

TEST(ExtCompare, LinearOnFiniteOrders) {
  for (const Dilator& t : {OmegaDilator(), BumpDilator(), SegmentDilator()}) {
    OrderRef x = FiniteOrder(3);
    std::vector<Token> pool;
    for (const ExtTerm& e : ExtEnumerateFinite(*t, 3, 5)) pool.push_back(e.ToToken());
    SuiteReport r("ext-linear");
    CheckStrictTotalOrder(pool, [&](const Token& a, const Token& b) {
      return ExtCompare(*t, *x, ExtTerm::FromToken(a), ExtTerm::FromToken(b));
    }, 3, r);
    EXPECT_TRUE(r.pass()) << t->name << " " << Summary(r);
  }
}

TEST(ExtMap, Examples) {
  Dilator w = OmegaDilator();
  EXPECT_EQ(ExtMap(*w, Shift(1), E("(ext (set 2 5) (seq 1 1 0))")), E("(ext (set 3 6) (seq 1 1 0))"));
  EXPECT_EQ(ExtMap(*w, Shift(0), E("(ext (set 2 5) (seq 1 1 0))")), E("(ext (set 2 5) (seq 1 1 0))"));
  EXPECT_EQ(ExtMap(*SegmentDilator(), FiniteEmbedding(FinEmbedding(4, {0, 3})), E("(ext (set 1) 0)")),
            E("(ext (set 3) 0)"));
}

TEST(ExtMap, PreservesOrderAndSupport) {
  Dilator w = OmegaDilator();
  OrderRef x = FiniteOrder(3);
  OrderRef y = FiniteOrder(5);
  std::vector<ExtTerm> terms = ExtEnumerateFinite(*w, 3, 5);
  for (const FinEmbedding& f : AllEmbeddings(3, 5)) {
    OrderEmbedding g = FiniteEmbedding(f);
    for (const ExtTerm& a : terms) {
      ExtTerm fa = ExtMap(*w, g, a);
      std::vector<Token> image;
      for (const Token& e : a.support) image.push_back(g.apply(e));
      EXPECT_EQ(fa.support, image);
      for (const ExtTerm& b : terms) {
        EXPECT_EQ(ExtCompare(*w, *x, a, b), ExtCompare(*w, *y, fa, ExtMap(*w, g, b)));
      }
    }
  }
}

// Push the token along the enumeration of the support: entry i -> a[i].
Token RelabelOmega(const ExtTerm& s) {
  std::vector<Token> out;
  for (const Token& e : SeqEntries(s.token)) out.push_back(s.support[static_cast<std::size_t>(e.as_int())]);
  return Seq(out);
}

TEST(Eta, Examples) {
  Dilator w = OmegaDilator();
  ExtTerm s = E("(ext (set 0 2) (seq 1 0))");
  EXPECT_EQ(Eta(*w, 3, s), RelabelOmega(s));
  EXPECT_EQ(Eta(*w, 3, s), S("(seq 2 0)"));
  EXPECT_EQ(EtaInverse(*w, 3, S("(seq 2 0)")), s);
  EXPECT_EQ(Eta(*BumpDilator(), 3, E("(ext (set) Omega)")), S("Omega"));
}

TEST(Eta, RoundTripOnOmegaOverTwo) {
  Dilator w = OmegaDilator();
  std::size_t count = 0;
  // Every support a of {0, 1} and every full-support token of length <= 3.
  for (const std::vector<int>& a : std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}}) {
    std::vector<Token> support;
    for (int v : a) support.push_back(Token::Int(v));
    for (const Token& sigma : w->Members(a.size(), 3)) {
      if (!HasFullSupport(*w, a.size(), sigma)) continue;
      ExtTerm s{support, sigma};
      Token image = Eta(*w, 2, s);
      EXPECT_EQ(image, RelabelOmega(s));
      EXPECT_EQ(EtaInverse(*w, 2, image), s);
      ++count;
    }
  }
  EXPECT_GT(count, 8u);
}

TEST(Eta, Natural) {
  for (const Dilator& t : {OmegaDilator(), BumpDilator(), SegmentDilator()}) {
    for (std::size_t n = 0; n <= 3; ++n) {
      std::vector<ExtTerm> terms = ExtEnumerateFinite(*t, n, 4);
      for (std::size_t m = n; m <= 4; ++m) {
        for (const FinEmbedding& f : AllEmbeddings(n, m)) {
          for (const ExtTerm& s : terms) {
            EXPECT_EQ(t->map(f, Eta(*t, n, s)), Eta(*t, m, ExtMap(*t, FiniteEmbedding(f), s)));
          }
        }
      }
    }
  }
}

TEST(MuExt, Examples) {
  Dilator w = OmegaDilator();
  OrderRef nat = Naturals();
  ExtTerm mu4 = MuExt(*w, *nat, Token::Int(4));
  EXPECT_EQ(mu4, E("(ext (set 4) (seq 0))"));
  ExtTerm s = E("(ext (set 2 3) (seq 1 1 0))");
  EXPECT_LT(testing::Sign(ExtCompare(*w, *nat, s, mu4)), 0);
  // Direct computation in omega_3 over the union {2, 3, 4}.
  Token left = w->map(FinEmbedding(3, {0, 1}), s.token);
  Token right = w->map(FinEmbedding(3, {2}), mu4.token);
  EXPECT_LT(testing::Sign(w->compare(3, left, right)), 0);
  EXPECT_EQ(testing::Sign(ExtCompare(*w, *nat, mu4, mu4)), 0);
}

TEST(MuExt, BelowMuIffParametersBelow) {
  for (const Dilator& t : {OmegaDilator(), SegmentDilator(), ZPlusDilator()}) {
    OrderRef x = FiniteOrder(4);
    for (const ExtTerm& s : ExtEnumerateFinite(*t, 4, 5)) {
      for (int v = 0; v < 4; ++v) {
        const Token e = Token::Int(v);
        EXPECT_EQ(ExtCompare(*t, *x, s, MuExt(*t, *x, e)) < 0, FinBelow(s.support, e, *x))
            << t->name << " " << s.ToToken();
      }
    }
  }
}

TEST(RangeFilter, EvensAndInitialSegments) {
  Dilator w = OmegaDilator();
  std::vector<ExtTerm> terms{E("(ext (set 2 4) (seq 1 0))"), E("(ext (set 3) (seq 0))")};
  RangePartition p = RangeFilter(*w, Evens(), terms);
  ASSERT_EQ(p.in_range.size(), 1u);
  EXPECT_EQ(p.in_range[0].first, terms[0]);
  EXPECT_EQ(p.in_range[0].second, E("(ext (set 1 2) (seq 1 0))"));
  ASSERT_EQ(p.outside.size(), 1u);
  EXPECT_EQ(p.outside[0], terms[1]);

  OrderRef x = FiniteOrder(4);
  std::vector<ExtTerm> all = ExtEnumerateFinite(*w, 4, 4);
  RangePartition below = RangeFilter(*w, FiniteEmbedding(FinEmbedding(4, {0, 1})), all);
  for (const auto& [term, pre] : below.in_range) EXPECT_TRUE(FinBelow(term.support, Token::Int(2), *x));
  for (const ExtTerm& term : below.outside) EXPECT_FALSE(FinBelow(term.support, Token::Int(2), *x));
}

TEST(CompareMemo, AgreesAndIsThreadSafe) {
  Dilator w = OmegaDilator();
  Dilator memo = WithCompareMemo(w, 1000);
  std::vector<Token> pool = w->Members(3, 5);
  auto run = [&] {
    for (const Token& a : pool) {
      for (const Token& b : pool) ASSERT_EQ(memo->compare(3, a, b), w->compare(3, a, b));
    }
  };
  std::thread t1(run), t2(run);
  t1.join();
  t2.join();
}

}  // namespace
}  // namespace dilator
