// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dilator/checks.hpp"
#include "dilator/compose.hpp"
#include "dilator/derivative.hpp"
#include "dilator/errors.hpp"
#include "dilator/oracle.hpp"
#include "dilator/suites.hpp"
#include "support/literal_derivative.hpp"
#include "support/ordering.hpp"

namespace dilator {
namespace {

Token S(const char* text) { return Token::Parse(text); }

TEST(DerivMember, Examples) {
  Dilator w = OmegaDilator();
  EXPECT_TRUE(DerivMember(*w, 0, S("(xi (set) (seq))")));
  // Would duplicate (mu 0).
  EXPECT_FALSE(DerivMember(*w, 1, S("(xi (set (mu 0)) (seq 0))")));
  EXPECT_TRUE(DerivMember(*w, 1, S("(xi (set (mu 0)) (seq 0 0))")));
  EXPECT_FALSE(DerivMember(*w, 1, S("(mu 1)")));
  // Members out of order.
  EXPECT_FALSE(DerivMember(*w, 2, S("(xi (set (mu 1) (mu 0)) (seq 1 0))")));
  // Token lacks full support.
  EXPECT_FALSE(DerivMember(*w, 2, S("(xi (set (mu 0) (mu 1)) (seq 1))")));
  EXPECT_FALSE(DerivMember(*w, 2, S("(xi (mu 0) (seq))")));
  EXPECT_FALSE(DerivMember(*SegmentDilator(), 3, S("(xi (set) 0)")));
}

TEST(DerivLength, MembersAreMuchShorter) {
  Dilator w = OmegaDilator();
  EXPECT_EQ(DerivLength(*w, MuTerm(3)), 1u);
  EXPECT_EQ(DerivLength(*w, S("(xi (set) (seq))")), 1u);
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 10000; ++i) {
    Token s = RandomOmegaTerm(rng, 20);
    if (IsMuTerm(s)) continue;
    for (const Token& r : XiMembers(s)) {
      ASSERT_LT(2 * DerivLength(*w, r), DerivLength(*w, s)) << s.str();
    }
  }
}

TEST(DerivCompare, Examples) {
  Dilator w = OmegaDilator();
  const Token zero = S("(xi (set) (seq))");
  const Token one = S("(xi (set (xi (set) (seq))) (seq 0))");
  EXPECT_LT(testing::Sign(DerivCompare(*w, zero, one)), 0);
  EXPECT_LT(testing::Sign(DerivCompare(*w, zero, MuTerm(0))), 0);
  EXPECT_LT(testing::Sign(DerivCompare(*w, MuTerm(0), MuTerm(1))), 0);
  EXPECT_LT(testing::Sign(DerivCompare(*w, MuTerm(0), S("(xi (set (mu 0)) (seq 0 0))"))), 0);
  EXPECT_GT(testing::Sign(DerivCompare(*w, MuTerm(1), S("(xi (set (mu 0)) (seq 0 0))"))), 0);
  EXPECT_EQ(testing::Sign(DerivCompare(*w, one, one)), 0);
  EXPECT_LT(TranslateTerm(zero), TranslateTerm(one));
}

TEST(DerivMap, Examples) {
  EXPECT_EQ(DerivMap(FinEmbedding(2, {1}), MuTerm(0)), MuTerm(1));
  const Token zero = S("(xi (set) (seq))");
  EXPECT_EQ(DerivMap(FinEmbedding(4, {0, 3}), zero), zero);
  EXPECT_EQ(DerivMap(FinEmbedding(4, {0, 3}), S("(xi (set (mu 0) (mu 1)) (seq 1 0))")),
            S("(xi (set (mu 0) (mu 3)) (seq 1 0))"));
}

TEST(DerivMap, FunctorLawsExhaustive) {
  Dilator d = Derivative(OmegaDilator());
  for (std::size_t n = 0; n <= 3; ++n) {
    auto members = d->Members(n, 6);
    for (std::size_t m = n; m <= 3; ++m) {
      for (const FinEmbedding& f : AllEmbeddings(n, m)) {
        for (std::size_t l = m; l <= 3; ++l) {
          for (const FinEmbedding& g : AllEmbeddings(m, l)) {
            for (const Token& s : members) {
              ASSERT_EQ(DerivMap(g, DerivMap(f, s)), DerivMap(f.Then(g), s));
            }
          }
        }
      }
      for (const Token& s : members) ASSERT_EQ(DerivMap(FinEmbedding::Identity(n), s), s);
    }
  }
}

TEST(DerivMap, OrderEmbeddingAndPullback) {
  Dilator w = OmegaDilator();
  Dilator d = Derivative(w);
  auto members = d->Members(2, 7);
  for (const FinEmbedding& f : AllEmbeddings(2, 4)) {
    for (const Token& s : members) {
      Token fs = DerivMap(f, s);
      ASSERT_TRUE(DerivMember(*w, 4, fs)) << fs.str();
      ASSERT_EQ(DerivPullback(f, fs), s);
      for (const Token& u : members) {
        ASSERT_EQ(DerivCompare(*w, s, u), DerivCompare(*w, fs, DerivMap(f, u)));
      }
    }
  }
  EXPECT_THROW(DerivPullback(FinEmbedding(3, {0, 2}), MuTerm(1)), DomainError);
}

TEST(DerivSupp, Examples) {
  EXPECT_EQ(DerivSupp(S("(xi (set (mu 0) (mu 2)) (seq 1 0))")), (IndexSet{0, 2}));
  EXPECT_EQ(DerivSupp(S("(xi (set) (seq))")), IndexSet{});
  EXPECT_EQ(DerivSupp(MuTerm(4)), (IndexSet{4}));
}

TEST(Collapse, ExamplesAndInverse) {
  Dilator w = OmegaDilator();
  EXPECT_EQ(XiCollapse(*w, S("(ext (set (mu 5)) (seq 0))")), MuTerm(5));
  EXPECT_EQ(XiCollapse(*w, S("(ext (set (mu 0)) (seq 0 0))")), S("(xi (set (mu 0)) (seq 0 0))"));
  EXPECT_EQ(XiExpand(*w, MuTerm(5)), S("(ext (set (mu 5)) (seq 0))"));
  EXPECT_THROW(XiCollapse(*w, S("(seq 0)")), DomainError);
}

TEST(Derivative, SegmentHasOnlyMuTerms) {
  Dilator d = Derivative(SegmentDilator());
  EXPECT_EQ(d->Members(3, 8), (std::vector<Token>{MuTerm(0), MuTerm(1), MuTerm(2)}));
}

TEST(Derivative, OmegaEnumerationContainsSmallTerms) {
  Dilator d = Derivative(OmegaDilator());
  auto members = d->Members(0, 4);
  auto has = [&](const Token& s) { return std::find(members.begin(), members.end(), s) != members.end(); };
  EXPECT_TRUE(has(S("(xi (set) (seq))")));
  EXPECT_TRUE(has(S("(xi (set (xi (set) (seq))) (seq 0))")));
  for (const Token& s : members) EXPECT_TRUE(DerivMember(*OmegaDilator(), 0, s));
}

TEST(Derivative, PraeDilatorLaws) {
  SuiteReport r = CheckPraeDilatorLaws(Derivative(OmegaDilator()), 3, 6);
  EXPECT_TRUE(r.pass()) << Summary(r);
  EXPECT_GT(r.checks, 0u);
}

TEST(Derivative, AgreesWithLiteralOrder) {
  auto run = [](const Dilator& t, std::size_t max_n, std::size_t bound) {
    testing::LiteralDerivativeOrder literal(*t);
    Dilator d = Derivative(t);
    for (std::size_t n = 0; n <= max_n; ++n) {
      auto members = d->Members(n, bound);
      for (const Token& s : members) {
        for (const Token& u : members) {
          ASSERT_EQ(DerivCompare(*t, s, u) < 0, literal.Less(s, u)) << s.str() << " vs " << u.str();
        }
      }
    }
  };
  run(OmegaDilator(), 2, 8);
  run(SegmentDilator(), 4, 6);
  run(Derivative(OmegaDilator()), 1, 4);
}

TEST(Derivative, TriplesAreTransitive) {
  Dilator w = OmegaDilator();
  auto members = Derivative(w)->Members(1, 6);
  for (const Token& a : members) {
    for (const Token& b : members) {
      if (DerivCompare(*w, a, b) >= 0) continue;
      for (const Token& c : members) {
        if (DerivCompare(*w, b, c) < 0) ASSERT_LT(testing::Sign(DerivCompare(*w, a, c)), 0);
      }
    }
  }
}

TEST(Derivative, EqualizerAndNormalitySuites) {
  SuiteReport eq = DerivEqualizerSuite(OmegaDilator(), 2, 7);
  EXPECT_TRUE(eq.pass()) << Summary(eq);
  SuiteReport normal = DerivNormalitySuite(OmegaDilator(), 2, 7);
  EXPECT_TRUE(normal.pass()) << Summary(normal);
}

TEST(Derivative, RequiresNormalBase) {
  EXPECT_THROW(Derivative(BumpDilator()), CapabilityError);
}

TEST(UniversalMorphism, SegmentIntoZPlus) {
  CertifiedUpperDerivative target = CertifyUpperDerivative(ZPlusUpperDerivative(), 2, 5);
  Morphism nu = UniversalMorphism(SegmentDilator(), target);
  EXPECT_EQ(nu.component(3, MuTerm(2)), Token::Int(2));
  SuiteReport r = CheckMorphism(nu, 3, 6);
  EXPECT_TRUE(r.pass()) << Summary(r);
  EXPECT_THROW(UniversalMorphism(OmegaDilator(), target), ContractError);
}

TEST(UniversalMorphism, IdentityOnOwnDerivative) {
  Dilator w = OmegaDilator();
  CertifiedUpperDerivative own = CertifyUpperDerivative(DerivativeUpperDerivative(w), 2, 5);
  Morphism nu = UniversalMorphism(w, own);
  for (std::size_t n = 0; n <= 2; ++n) {
    for (const Token& s : Derivative(w)->Members(n, 6)) ASSERT_EQ(nu.component(n, s), s);
  }
}

}  // namespace
}  // namespace dilator
