// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "dilator/barind.hpp"
#include "dilator/derivative.hpp"
#include "dilator/errors.hpp"
#include "support/ordering.hpp"

namespace dilator {
namespace {

Token S(const char* text) { return Token::Parse(text); }
ExtTerm E(const char* text) { return ExtTerm::FromToken(Token::Parse(text)); }

std::shared_ptr<const TreeFamily> Fixture() {
  std::ifstream in(std::string(DILATOR_TEST_DATA) + "/family.json");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return std::make_shared<const TreeFamily>(TreeFamily::FromJson(buffer.str()));
}

std::shared_ptr<const TreeFamily> Small() {
  return std::make_shared<const TreeFamily>(TreeFamily::FromJson(
      R"({"order": ["a", "b"], "trees": {"a": [[]], "b": [[], [5], [5, 1]]}})"));
}

TEST(TreeFamily, ParseErrors) {
  EXPECT_THROW(TreeFamily::FromJson("{"), ParseError);
  EXPECT_THROW(TreeFamily::FromJson(R"({"trees": {}})"), ParseError);
  EXPECT_THROW(TreeFamily::FromJson(R"({"order": ["a"], "trees": {"a": [[-1]]}})"), ParseError);
  EXPECT_THROW(TreeFamily::FromJson(R"({"order": ["a"], "trees": {"a": [[], [0, 1]]}})"),
               ParseError);
  EXPECT_THROW(TreeFamily::FromJson(R"({"order": ["a"], "trees": {"z": [[]]}})"), ParseError);
}

TEST(TreeFamily, CodesAreABijectionOntoListedElements) {
  auto family = Fixture();
  std::vector<Token> elements = family->SumElements();
  std::uint64_t top = 0;
  for (const Token& e : elements) top = std::max(top, family->Code(e));
  std::size_t decoded = 0;
  for (std::uint64_t c = 0; c <= top; ++c) {
    if (auto e = family->Decode(c)) {
      ++decoded;
      EXPECT_EQ(family->Code(*e), c);
    }
  }
  EXPECT_EQ(decoded, elements.size());
  for (const Token& e : elements) EXPECT_GE(family->Code(e), SumSequence(e).size());
  EXPECT_EQ(*family->Decode(0), SumElement(S("a"), {}));
  EXPECT_EQ(*family->Decode(1), SumElement(S("b"), {}));
}

TEST(TreeDilator, EmptyTreeIsEmpty) {
  auto family = std::make_shared<const TreeFamily>(
      std::vector<Token>{S("a")}, std::map<Token, std::vector<NatSeq>>{{S("a"), {}}});
  Dilator h = TreeDilator(family, S("a"));
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_TRUE(h->Members(n, 5).empty());
  EXPECT_FALSE(h->member(0, S("(seq)")));
}

TEST(TreeDilator, RootOnly) {
  auto family = std::make_shared<const TreeFamily>(
      std::vector<Token>{S("a")}, std::map<Token, std::vector<NatSeq>>{{S("a"), {{}}}});
  Dilator h = TreeDilator(family, S("a"));
  EXPECT_TRUE(h->member(2, S("(seq)")));
  EXPECT_FALSE(h->member(2, S("(seq (pair bot 0))")));
  EXPECT_THROW(TreeDilator(family, S("q")), DomainError);
}

TEST(TreeDilator, Support) {
  Dilator h = TreeDilator(Small(), S("b"));
  const Token tau = S("(seq (pair 2 5) (pair bot 1))");
  ASSERT_TRUE(h->member(3, tau));
  EXPECT_EQ(h->supp(3, tau), (IndexSet{2}));
  EXPECT_FALSE(h->member(2, tau));
  EXPECT_FALSE(h->member(3, S("(seq (pair bot 5))")));
  SuiteReport laws = CheckPraeDilatorLaws(h, 3, 4);
  EXPECT_TRUE(laws.pass()) << Summary(laws);
}

TEST(TreeAlternative, AgreesWithExtensionOrder) {
  auto family = Fixture();
  OrderRef z = FiniteOrder(3);
  for (const Token& x : family->elements()) {
    Dilator h = TreeDilator(family, x);
    std::vector<ExtTerm> terms = ExtEnumerateFinite(*h, 3, 6);
    ASSERT_FALSE(terms.empty());
    for (const ExtTerm& a : terms) {
      for (const ExtTerm& b : terms) {
        ASSERT_EQ(TreeAlternativeCompare(*z, a, b), ExtCompare(*h, *z, a, b))
            << a.ToToken().str() << " vs " << b.ToToken().str();
      }
    }
  }
}

TEST(TreeAlternative, Examples) {
  OrderRef z = FiniteOrder(3);
  // An end extension lies below.
  EXPECT_LT(testing::Sign(TreeAlternativeCompare(*z, E("(ext (set) (seq (pair bot 1) (pair bot 0)))"),
                                   E("(ext (set) (seq (pair bot 1)))"))),
            0);
  EXPECT_LT(testing::Sign(TreeAlternativeCompare(*z, E("(ext (set) (seq (pair bot 4)))"),
                                   E("(ext (set 0) (seq (pair 0 0)))"))),
            0);
  EXPECT_EQ(TreeAlternative(E("(ext (set 2) (seq (pair 0 5) (pair bot 1)))")),
            S("(seq (pair 2 5) (pair bot 1))"));
}

TEST(FiniteApproximation, Examples) {
  auto family = Fixture();
  EXPECT_EQ(FiniteApproximation(*family, SumElement(S("a"), {})), S("(seq)"));
  EXPECT_EQ(FiniteApproximation(*family, SumElement(S("a"), NatSeq{1})), S("(seq (pair bot 1))"));
  EXPECT_THROW(FiniteApproximation(*family, SumElement(S("a"), NatSeq{7})), DomainError);
  EXPECT_TRUE(CodedPositions(*family, SumElement(S("a"), NatSeq{0, 0, 0})).empty());
}

// Embeddings of the coded elements into an order Z, given by one global
// increasing map so that any two of them agree where both are defined.
struct GlobalEmbedding {
  OrderRef z;
  std::function<Token(const Token&)> apply;
};

std::vector<GlobalEmbedding> Embeddings(const TreeFamily& family) {
  std::vector<Token> all = family.SumElements();
  auto rank = [all](const Token& e) {
    return static_cast<std::int64_t>(std::find(all.begin(), all.end(), e) - all.begin());
  };
  return {
      {family.SumOrder(), [](const Token& e) { return e; }},
      {Naturals(), [rank](const Token& e) { return Token::Int(3 * rank(e) + 1); }},
  };
}

ExtTerm Approximation(const TreeFamily& family, const GlobalEmbedding& e, const Token& element) {
  std::vector<Token> range;
  for (std::uint64_t j : CodedPositions(family, element)) range.push_back(e.apply(*family.Decode(j)));
  range = CanonicalSet(*e.z, std::move(range));
  return ExtTerm{range, FiniteApproximation(family, element)};
}

TEST(FiniteApproximation, IsAnElementForEveryEmbedding) {
  auto family = Fixture();
  auto bundle = MakeFamilyDilators(family);
  for (const GlobalEmbedding& e : Embeddings(*family)) {
    for (const Token& element : family->SumElements()) {
      ASSERT_TRUE(ExtMember(bundle.H(element.arg(0)), *e.z, Approximation(*family, e, element)))
          << element.str();
    }
  }
}

TEST(FiniteApproximation, MonotoneAlongTheTreeOrder) {
  auto family = Fixture();
  auto bundle = MakeFamilyDilators(family);
  std::size_t pairs = 0;
  for (const GlobalEmbedding& e : Embeddings(*family)) {
    for (std::size_t xi = 0; xi < family->elements().size(); ++xi) {
      const Token& x = family->elements()[xi];
      auto nodes = family->tree(xi);
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
          ++pairs;
          ExtTerm lo = Approximation(*family, e, SumElement(x, nodes[i]));
          ExtTerm hi = Approximation(*family, e, SumElement(x, nodes[j]));
          ASSERT_LT(testing::Sign(ExtCompare(bundle.H(x), *e.z, lo, hi)), 0)
              << lo.ToToken().str() << " vs " << hi.ToToken().str();
        }
      }
    }
  }
  EXPECT_GT(pairs, 100u);
}

TEST(FamilyDilator, NormalStructure) {
  auto bundle = MakeFamilyDilators(Fixture());
  const PraeDilator& f = *bundle.f;
  EXPECT_EQ(f.Mu(2, 1), S("(triple 1 bot star)"));
  EXPECT_TRUE(f.member(2, S("(triple 0 bot star)")));
  EXPECT_LT(testing::Sign(f.compare(2, S("(triple 0 bot star)"), S("(triple 1 bot star)"))), 0);
  EXPECT_LT(testing::Sign(f.compare(2, S("(triple 0 bot star)"), S("(triple 1 a (seq))"))), 0);
  SuiteReport normal = CheckNormality(bundle.f, 2, 4);
  EXPECT_TRUE(normal.pass()) << Summary(normal);
  SuiteReport laws = CheckPraeDilatorLaws(bundle.f, 2, 4);
  EXPECT_TRUE(laws.pass()) << Summary(laws);
}

TEST(ChiF, ExampleAndErrors) {
  auto bundle = MakeFamilyDilators(Fixture());
  OrderRef z = FiniteOrder(3);
  EXPECT_EQ(ChiF(bundle, *z, S("(fz 2 bot (ext (set) star))")).ToToken(),
            S("(ext (set 2) (triple 0 bot star))"));
  EXPECT_THROW(ChiF(bundle, *z, S("(fz 0 a (ext (set 1) (seq)))")), DomainError);
  EXPECT_THROW(ChiFInverse(bundle, *z, E("(ext (set) (seq))")), DomainError);
}

TEST(ChiF, RoundTripAndOrder) {
  auto bundle = MakeFamilyDilators(Fixture());
  OrderRef z = FiniteOrder(3);
  std::vector<ExtTerm> terms = ExtEnumerateFinite(*bundle.f, 3, 5);
  ASSERT_GT(terms.size(), 10u);
  std::vector<Token> fz;
  for (const ExtTerm& t : terms) {
    Token p = ChiFInverse(bundle, *z, t);
    ASSERT_TRUE(FzMember(bundle, *z, p)) << p.str();
    ASSERT_EQ(ChiF(bundle, *z, p), t);
    fz.push_back(p);
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = 0; j < terms.size(); ++j) {
      ASSERT_EQ(FzCompare(bundle, *z, fz[i], fz[j]), ExtCompare(*bundle.f, *z, terms[i], terms[j]));
    }
  }
}

TEST(TreeEmbedding, OrderPreservingAndBounded) {
  auto bundle = MakeFamilyDilators(Fixture());
  TreeEmbedding j(bundle, DefaultFamilyTarget(bundle));
  SuiteReport r = CheckTreeEmbedding(j);
  EXPECT_TRUE(r.pass()) << Summary(r);
  EXPECT_GT(r.checks, 500u);
  const Token lo = SumElement(S("a"), NatSeq{0, 0, 0});
  const Token hi = SumElement(S("a"), NatSeq{});
  EXPECT_LT(testing::Sign(j.Compare(j(lo), j(hi))), 0);
  EXPECT_LT(testing::Sign(j.Compare(j(hi), j.MuOf(S("b")))), 0);
}

TEST(TreeEmbedding, TargetMustBeOverF) {
  auto bundle = MakeFamilyDilators(Fixture());
  auto other = CertifyUpperDerivative(DerivativeUpperDerivative(OmegaDilator()), 1, 3);
  EXPECT_THROW(TreeEmbedding(bundle, other), ContractError);
}

TEST(TreeFamily, WellFounded) {
  SuiteReport r = CheckFamilyWellFounded(*Fixture());
  EXPECT_TRUE(r.pass()) << Summary(r);
}

}  // namespace
}  // namespace dilator
