// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/suites.hpp"

#include <algorithm>
#include <charconv>

#include "dilator/checks.hpp"
#include "dilator/compose.hpp"
#include "dilator/derivative.hpp"
#include "dilator/errors.hpp"
#include "dilator/extension.hpp"
#include "dilator/heights.hpp"
#include "dilator/oracle.hpp"

namespace dilator {

namespace {

std::int64_t I(std::size_t v) { return static_cast<std::int64_t>(v); }

void Record(SuiteReport& r, const std::string& dilator, std::size_t max_n, std::size_t bound) {
  r.parameters["dilator"] = dilator;
  r.parameters["max_n"] = I(max_n);
  r.parameters["bound"] = I(bound);
}

std::size_t Uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

FinEmbedding RandomEmbedding(std::mt19937_64& rng, std::size_t n, std::size_t l) {
  IndexSet all(l);
  for (std::size_t i = 0; i < l; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng);
  IndexSet range(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(range.begin(), range.end());
  return FinEmbedding::FromRange(l, std::move(range));
}

int Sign(Ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

std::vector<Token> Tokens(const std::vector<ExtTerm>& terms) {
  std::vector<Token> out;
  out.reserve(terms.size());
  for (const ExtTerm& e : terms) out.push_back(e.ToToken());
  return out;
}

}  // namespace

SuiteReport DerivLinearitySuite(const Dilator& t, std::size_t max_n, std::size_t bound) {
  SuiteReport r("deriv-linearity");
  Record(r, t->name, max_n, bound);
  Dilator d = Derivative(t);
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Token> pool = d->Members(n, bound);
    CheckStrictTotalOrder(pool, [&t](const Token& a, const Token& b) { return DerivCompare(*t, a, b); },
                          n, r);
  }
  r.Canonicalize();
  return r;
}

SuiteReport DerivEqualizerSuite(const Dilator& t, std::size_t max_n, std::size_t bound) {
  SuiteReport r("deriv-equalizer");
  Record(r, t->name, max_n, bound);
  UpperDerivative u = DerivativeUpperDerivative(t);
  const Token unit = t->Mu(1, 0);
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Token> pool = u.target->Members(n, bound);
    std::vector<Token> expanded;
    for (const Token& s : pool) {
      r.checks += 3;
      Token e = XiExpand(*t, s);
      if (!u.composite->member(n, e)) r.Fail("expand-valid", n, Witness({s, e}));
      if (XiCollapse(*t, e) != s) r.Fail("collapse-expand", n, Witness({s, e}));
      Token image = XiCollapse(*t, ExtToken(std::vector<Token>{s}, unit));
      if ((image == s) != IsMuTerm(s)) {
        r.Fail("equalizer", n, Witness({s, image}),
               IsMuTerm(s) ? "mu term not fixed" : "non-mu term fixed");
      }
      expanded.push_back(std::move(e));
    }
    // pool is ascending; the expansions must be too.
    for (std::size_t i = 0; i < expanded.size(); ++i) {
      for (std::size_t j = i + 1; j < expanded.size(); ++j) {
        ++r.checks;
        if (u.composite->compare(n, expanded[i], expanded[j]) >= 0) {
          r.Fail("order-preserving", n, Witness({pool[i], pool[j]}));
        }
      }
    }
    for (const Token& e : u.composite->Members(n, bound)) {
      r.checks += 2;
      Token s = XiCollapse(*t, e);
      if (!DerivMember(*t, n, s)) r.Fail("collapse-valid", n, Witness({e, s}));
      if (XiExpand(*t, s) != e) r.Fail("expand-collapse", n, Witness({e, s}));
    }
  }
  r.Canonicalize();
  return r;
}

SuiteReport DerivNormalitySuite(const Dilator& t, std::size_t max_n, std::size_t bound) {
  SuiteReport r("deriv-normality");
  Record(r, t->name, max_n, bound);
  Dilator d = Derivative(t);
  r.Absorb(CheckPraeDilatorLaws(d, max_n, bound));
  r.Absorb(CheckNormality(d, max_n, bound));
  r.Canonicalize();
  return r;
}

SuiteReport DerivHeightSuite(const Dilator& t, const HeightSuiteOptions& o) {
  SuiteReport r("deriv-heights");
  Record(r, t->name, o.max_n, o.bound);
  r.parameters["samples"] = I(o.samples);
  r.parameters["segment_samples"] = I(o.segment_samples);
  r.parameters["max_order"] = I(o.max_order);
  r.parameters["seed"] = static_cast<std::int64_t>(o.seed);
  Dilator d = Derivative(t);
  std::mt19937_64 rng(o.seed);

  std::vector<std::vector<Token>> pools;
  std::vector<std::size_t> nonempty;
  for (std::size_t n = 0; n <= o.max_n; ++n) {
    pools.push_back(d->Members(n, o.bound));
    if (!pools.back().empty()) nonempty.push_back(n);
  }
  if (nonempty.empty()) return r;

  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::size_t n = nonempty[Uniform(rng, 0, nonempty.size() - 1)];
    const Token& s = pools[n][Uniform(rng, 0, pools[n].size() - 1)];
    const std::size_t l = n + Uniform(rng, 0, 2);
    Token image = DerivMap(RandomEmbedding(rng, n, l), s);
    ++r.checks;
    if (DerivHeight(image) != DerivHeight(s)) r.Fail("height-invariant", n, Witness({s, image}));
  }

  std::int64_t premise_hits = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const std::size_t n = nonempty[Uniform(rng, 0, nonempty.size() - 1)];
    const Token* s = &pools[n][Uniform(rng, 0, pools[n].size() - 1)];
    const Token* u = &pools[n][Uniform(rng, 0, pools[n].size() - 1)];
    if (DerivHeight(*s) > DerivHeight(*u)) std::swap(s, u);
    ++r.checks;
    if (DerivHeight(*s) < DerivHeight(*u) && IndexSetFinLessEq(DerivSupp(*s), DerivSupp(*u))) {
      ++premise_hits;
      if (DerivCompare(*t, *s, *u) >= 0) r.Fail("height-below", n, Witness({*s, *u}));
    }
  }
  r.parameters["premise_hits"] = premise_hits;

  const std::size_t segment_bound = std::min<std::size_t>(o.bound, 5);
  std::vector<OrderRef> orders;
  std::vector<std::vector<ExtTerm>> terms;
  for (std::size_t k = 1; k <= o.max_order; ++k) {
    OrderRef x = FiniteOrder(k);
    std::vector<ExtTerm> all = ExtEnumerateFinite(*d, k, segment_bound);
    std::sort(all.begin(), all.end(), [&](const ExtTerm& a, const ExtTerm& b) {
      return ExtCompareUnchecked(*d, *x, a, b) < 0;
    });
    orders.push_back(x);
    terms.push_back(std::move(all));
  }
  for (std::size_t i = 0; i < o.segment_samples; ++i) {
    const std::size_t k = Uniform(rng, 1, o.max_order);
    const LinearOrder& x = *orders[k - 1];
    const auto& pool = terms[k - 1];
    if (pool.empty()) continue;
    const Token cut = Token::Int(I(Uniform(rng, 0, k - 1)));
    const std::size_t height = Uniform(rng, 0, 4);
    std::size_t hi = Uniform(rng, 0, pool.size() - 1);
    std::size_t lo = Uniform(rng, 0, hi);
    ++r.checks;
    const bool upper = SegmentMember(*d, x, SegmentQuery{cut, height, pool[hi]});
    if (!upper || !BelowElement(x, cut, pool[lo])) continue;
    if (!SegmentMember(*d, x, SegmentQuery{cut, height, pool[lo]})) {
      r.Fail("segment-initial", k, Witness({cut, Token::Int(I(height)), pool[lo].ToToken(),
                                             pool[hi].ToToken()}));
    }
  }
  r.Canonicalize();
  return r;
}

Token RandomOmegaTerm(std::mt19937_64& rng, std::size_t budget) {
  const Dilator omega = OmegaDilator();
  if (budget < 3 || Uniform(rng, 0, 3) == 0) return XiTerm({}, Seq({}));
  const std::size_t k = Uniform(rng, 1, std::min<std::size_t>(3, (budget - 1) / 2));
  const std::size_t share = std::max<std::size_t>(1, (budget - 1 - k) / k);
  std::vector<Token> members;
  for (std::size_t i = 0; i < k; ++i) members.push_back(RandomOmegaTerm(rng, Uniform(rng, 1, share)));
  SafeSort(members, [&](const Token& a, const Token& b) { return DerivCompare(*omega, a, b); });
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::size_t used = 1 + members.size();
  for (const Token& m : members) used += DerivSize(*omega, m);
  std::vector<std::size_t> mult(members.size(), 1);
  if (used < budget && !members.empty()) {
    const std::size_t extra = Uniform(rng, 0, std::min<std::size_t>(2, budget - used));
    for (std::size_t e = 0; e < extra; ++e) ++mult[Uniform(rng, 0, mult.size() - 1)];
  }
  std::vector<Token> seq;
  for (std::size_t i = members.size(); i-- > 0;) {
    for (std::size_t c = 0; c < mult[i]; ++c) seq.push_back(Token::Int(I(i)));
  }
  return XiTerm(std::move(members), Seq(std::move(seq)));
}

SuiteReport OracleSuite(std::size_t bound, std::size_t random_pairs, std::size_t random_budget,
                        std::uint64_t seed) {
  SuiteReport r("oracle-equivalence");
  r.parameters["bound"] = I(bound);
  r.parameters["random_pairs"] = I(random_pairs);
  r.parameters["random_budget"] = I(random_budget);
  r.parameters["seed"] = static_cast<std::int64_t>(seed);
  const Dilator omega = OmegaDilator();
  std::vector<Token> pool = Derivative(omega)->Members(0, bound);
  std::vector<CnfOrdinal> images;
  images.reserve(pool.size());
  for (const Token& s : pool) images.push_back(TranslateTerm(s));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      ++r.checks;
      const int deriv = Sign(DerivCompare(*omega, pool[i], pool[j]));
      const int cnf = Sign(CnfCompare(images[i], images[j]));
      if (deriv != cnf || cnf == 0) {
        r.Fail("translate-order", 0, Witness({pool[i], pool[j]}),
               images[i].str() + " vs " + images[j].str());
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_pairs; ++i) {
    Token s = RandomOmegaTerm(rng, random_budget);
    Token u = RandomOmegaTerm(rng, random_budget);
    ++r.checks;
    if (!DerivMember(*omega, 0, s) || !DerivMember(*omega, 0, u)) {
      r.Fail("random-term-valid", 0, Witness({s, u}));
      continue;
    }
    const CnfOrdinal a = TranslateTerm(s), b = TranslateTerm(u);
    if (Sign(DerivCompare(*omega, s, u)) != Sign(CnfCompare(a, b))) {
      r.Fail("translate-order", 0, Witness({s, u}), a.str() + " vs " + b.str());
    }
  }
  r.Canonicalize();
  return r;
}

SuiteReport EtaSuite(const Dilator& t, std::size_t max_n, std::size_t bound) {
  SuiteReport r("eta-isomorphism");
  Record(r, t->name, max_n, bound);
  for (std::size_t n = 0; n <= max_n; ++n) {
    OrderRef x = FiniteOrder(n);
    std::vector<ExtTerm> terms = ExtEnumerateFinite(*t, n, bound);
    std::vector<Token> images;
    for (const ExtTerm& s : terms) {
      r.checks += 2;
      Token sigma = Eta(*t, n, s);
      if (!t->member(n, sigma)) r.Fail("eta-valid", n, Witness({s.ToToken(), sigma}));
      if (EtaInverse(*t, n, sigma) != s) r.Fail("eta-roundtrip", n, Witness({s.ToToken(), sigma}));
      images.push_back(std::move(sigma));
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        ++r.checks;
        if (Sign(ExtCompare(*t, *x, terms[i], terms[j])) != Sign(t->compare(n, images[i], images[j]))) {
          r.Fail("eta-order", n, Witness({terms[i].ToToken(), terms[j].ToToken()}));
        }
      }
    }
    for (const Token& sigma : t->Members(n, bound)) {
      r.checks += 2;
      ExtTerm s = EtaInverse(*t, n, sigma);
      if (!ExtMember(*t, *x, s)) r.Fail("eta-inverse-valid", n, Witness({sigma, s.ToToken()}));
      if (Eta(*t, n, s) != sigma) r.Fail("eta-inverse-roundtrip", n, Witness({sigma, s.ToToken()}));
    }
  }
  r.Canonicalize();
  return r;
}

SuiteReport ZetaSuite(const Dilator& outer, const Dilator& inner, std::size_t max_k,
                      std::size_t bound) {
  SuiteReport r("zeta-isomorphism");
  r.parameters["outer"] = outer->name;
  r.parameters["inner"] = inner->name;
  r.parameters["max_k"] = I(max_k);
  r.parameters["bound"] = I(bound);
  Dilator comp = Compose(outer, inner);
  for (std::size_t k = 0; k <= max_k; ++k) {
    OrderRef x = FiniteOrder(k);
    OrderRef inner_x = ExtOrder(inner, x);
    std::vector<ExtTerm> inner_terms = ExtEnumerateFinite(*inner, k, bound);
    std::sort(inner_terms.begin(), inner_terms.end(), [&](const ExtTerm& a, const ExtTerm& b) {
      return ExtCompareUnchecked(*inner, *x, a, b) < 0;
    });
    std::vector<Token> pool = Tokens(inner_terms);
    std::vector<ExtTerm> outer_terms = ExtEnumerate(*outer, pool, bound, [&](const Token& e) {
      return ExtSize(*inner, ExtTerm::FromToken(e), [](const Token&) { return std::size_t{1}; });
    });
    std::sort(outer_terms.begin(), outer_terms.end(), [&](const ExtTerm& a, const ExtTerm& b) {
      return ExtCompareUnchecked(*outer, *inner_x, a, b) < 0;
    });
    std::vector<ExtTerm> images;
    for (const ExtTerm& s : outer_terms) {
      r.checks += 3;
      ExtTerm z = Zeta(*outer, *inner, *x, s);
      if (!ExtMember(*comp, *x, z)) r.Fail("zeta-valid", k, Witness({s.ToToken(), z.ToToken()}));
      if (ZetaInverse(*outer, *inner, *x, z) != s) {
        r.Fail("zeta-roundtrip", k, Witness({s.ToToken(), z.ToToken()}));
      }
      std::vector<Token> params;
      for (const Token& e : s.support) {
        for (const Token& p : ExtTerm::FromToken(e).support) params.push_back(p);
      }
      if (CanonicalSet(*x, std::move(params)) != z.support) {
        r.Fail("zeta-support", k, Witness({s.ToToken(), z.ToToken()}));
      }
      images.push_back(std::move(z));
    }
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        ++r.checks;
        if (ExtCompare(*comp, *x, images[i], images[j]) >= 0) {
          r.Fail("zeta-order", k, Witness({outer_terms[i].ToToken(), outer_terms[j].ToToken()}));
        }
      }
    }
    for (const ExtTerm& z : ExtEnumerateFinite(*comp, k, bound)) {
      r.checks += 1;
      ExtTerm s = ZetaInverse(*outer, *inner, *x, z);
      if (Zeta(*outer, *inner, *x, s) != z) {
        r.Fail("zeta-inverse-roundtrip", k, Witness({z.ToToken(), s.ToToken()}));
      }
    }
  }
  r.Canonicalize();
  return r;
}

SuiteReport UniversalIdentitySuite(const Dilator& t, std::size_t max_n, std::size_t bound) {
  SuiteReport r("universal-identity");
  Record(r, t->name, max_n, bound);
  CertifiedUpperDerivative target = CertifyUpperDerivative(DerivativeUpperDerivative(t), max_n, bound);
  Morphism nu = UniversalMorphism(t, target);
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (const Token& s : nu.source->Members(n, bound)) {
      ++r.checks;
      Token image = nu.component(n, s);
      if (image != s) r.Fail("identity", n, Witness({s, image}));
    }
  }
  r.Canonicalize();
  return r;
}

SuiteReport UniversalZPlusSuite(std::size_t max_n, std::size_t bound) {
  SuiteReport r("universal-zplus");
  Record(r, "segment", max_n, bound);
  CertifiedUpperDerivative target = CertifyUpperDerivative(ZPlusUpperDerivative(), max_n, bound);
  Morphism nu = UniversalMorphism(target.base(), target);
  r.Absorb(CheckUpperDerivativeMorphism(DerivativeUpperDerivative(target.base()), target.get(), nu,
                                        max_n, bound));
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t m = 0; m < n; ++m) {
      ++r.checks;
      Token image = nu.component(n, MuTerm(m));
      if (image != Token::Int(I(m))) r.Fail("mu-to-finite", n, Witness({MuTerm(m), image}));
    }
  }
  r.Canonicalize();
  return r;
}

SuiteReport SegmentDerivativeSuite(std::size_t max_n, std::size_t bound) {
  SuiteReport r("segment-derivative");
  Record(r, "segment", max_n, bound);
  Dilator d = Derivative(SegmentDilator());
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t b = 1; b <= bound; ++b) {
      std::vector<Token> expected;
      for (std::size_t m = 0; m < n; ++m) expected.push_back(MuTerm(m));
      ++r.checks;
      std::vector<Token> got = d->Members(n, b);
      if (got != expected) {
        r.Fail("exactly-mu", n, Witness(got), "bound " + std::to_string(b));
      }
    }
  }
  r.Canonicalize();
  return r;
}

SuiteConfig ConfigForBound(const std::string& bound, std::uint64_t seed) {
  SuiteConfig c;
  c.seed = seed;
  if (bound == "small") return c;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(bound.data(), bound.data() + bound.size(), value);
  if (ec != std::errc() || ptr != bound.data() + bound.size() || value == 0) {
    throw DomainError("bound must be 'small' or a positive integer, got '" + bound + "'");
  }
  c.bound = value;
  return c;
}

std::vector<SuiteReport> RunAllSuites(const SuiteConfig& c) {
  const Dilator omega = OmegaDilator();
  const Dilator segment = SegmentDilator();
  const std::size_t ext_bound = std::min<std::size_t>(c.bound, 4);
  std::vector<SuiteReport> out;
  out.push_back(DerivLinearitySuite(omega, c.max_n, c.bound));
  out.push_back(DerivLinearitySuite(segment, c.max_n, c.bound));
  out.push_back(SegmentDerivativeSuite(c.max_n + 2, c.bound));
  out.push_back(OracleSuite(c.bound, c.samples, c.bound + 8, c.seed));
  for (const Dilator& t : {omega, BumpDilator(), segment}) out.push_back(EtaSuite(t, 3, ext_bound));
  out.push_back(ZetaSuite(omega, omega, 2, ext_bound));
  out.push_back(DerivEqualizerSuite(omega, c.max_n, std::min<std::size_t>(c.bound, 6)));
  out.push_back(DerivNormalitySuite(omega, c.max_n, std::min<std::size_t>(c.bound, 5)));
  out.push_back(UniversalIdentitySuite(omega, c.max_n, std::min<std::size_t>(c.bound, 5)));
  out.push_back(UniversalZPlusSuite(3, ext_bound));
  HeightSuiteOptions h;
  h.max_n = c.max_n;
  h.bound = c.bound;
  h.samples = c.samples;
  h.segment_samples = std::max<std::size_t>(1, c.samples / 10);
  h.seed = c.seed;
  out.push_back(DerivHeightSuite(omega, h));
  return out;
}

}  // namespace dilator
