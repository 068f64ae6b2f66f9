// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/compose.hpp"

#include <algorithm>
#include <mutex>

#include "dilator/checks.hpp"
#include "dilator/errors.hpp"
#include "dilator/parallel.hpp"

namespace dilator {

Dilator Compose(const Dilator& outer, const Dilator& inner) {
  PraeDilator d;
  d.name = "(" + outer->name + " o " + inner->name + ")";
  const Dilator t = outer, s = inner;
  d.member = [t, s](std::size_t n, const Token& tok) {
    if (!tok.is_tagged("ext", 2) || !tok.arg(0).is_tagged("set")) return false;
    auto a = tok.arg(0).args();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!s->member(n, a[i])) return false;
      if (i > 0 && !s->Less(n, a[i - 1], a[i])) return false;
    }
    return HasFullSupport(*t, a.size(), tok.arg(1));
  };
  d.compare = [t, s](std::size_t n, const Token& x, const Token& y) {
    return ExtCompareWith(*t, x.arg(0).args(), x.arg(1), y.arg(0).args(), y.arg(1),
                          [&](const Token& p, const Token& q) { return s->compare(n, p, q); });
  };
  d.map = [s](const FinEmbedding& f, const Token& tok) {
    std::vector<Token> image;
    for (const Token& e : tok.arg(0).args()) image.push_back(s->map(f, e));
    return ExtToken(image, tok.arg(1));
  };
  d.supp = [s](std::size_t n, const Token& tok) {
    std::vector<IndexSet> parts;
    for (const Token& e : tok.arg(0).args()) parts.push_back(s->supp(n, e));
    return UnionOf(parts);
  };
  d.pullback = [s](const FinEmbedding& f, const Token& tok) {
    std::vector<Token> pre;
    for (const Token& e : tok.arg(0).args()) pre.push_back(s->pullback(f, e));
    return ExtToken(pre, tok.arg(1));
  };
  d.size = [t, s](const Token& tok) {
    std::size_t total = 1 + t->size(tok.arg(1));
    for (const Token& e : tok.arg(0).args()) total += s->size(e);
    return total;
  };
  if (t->can_enumerate() && s->can_enumerate()) {
    d.enumerate = [t, s](std::size_t n, std::size_t bound) {
      std::vector<Token> pool = s->Members(n, bound);
      SafeSort(pool, [&](const Token& a, const Token& b) { return s->compare(n, a, b); });
      std::vector<Token> out;
      for (const ExtTerm& e :
           ExtEnumerate(*t, pool, bound, [&s](const Token& x) { return s->size(x); })) {
        out.push_back(e.ToToken());
      }
      SafeSort(out, [&](const Token& a, const Token& b) {
        return ExtCompareWith(*t, a.arg(0).args(), a.arg(1), b.arg(0).args(), b.arg(1),
                              [&](const Token& p, const Token& q) { return s->compare(n, p, q); });
      });
      return out;
    };
  }
  if (t->is_normal() && s->is_normal()) {
    d.mu = [t, s](std::size_t n, std::size_t m) {
      return ExtToken(std::vector<Token>{s->Mu(n, m)}, t->Mu(1, 0));
    };
  }
  return std::make_shared<const PraeDilator>(std::move(d));
}

namespace {

std::vector<Token> UnionUnder(const LinearOrder& x, std::vector<Token> all) {
  SafeSort(all, [&x](const Token& a, const Token& b) { return x.compare(a, b); });
  std::vector<Token> out;
  for (Token& t : all) {
    if (out.empty() || x.compare(out.back(), t) != 0) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

ExtTerm ZetaUnchecked(const PraeDilator& outer, const PraeDilator& inner, const LinearOrder& x,
                      const ExtTerm& s) {
  std::vector<ExtTerm> parts;
  std::vector<Token> all;
  for (const Token& rho : s.support) {
    parts.push_back(ExtTerm::FromToken(rho));
    all.insert(all.end(), parts.back().support.begin(), parts.back().support.end());
  }
  std::vector<Token> c = UnionUnder(x, std::move(all));
  const std::size_t k = c.size();
  std::vector<Token> pushed;
  pushed.reserve(parts.size());
  for (const ExtTerm& p : parts) {
    pushed.push_back(inner.map(AbsOfEmbedding(p.support, c, x), p.token));
    if (pushed.size() > 1 && !inner.Less(k, pushed[pushed.size() - 2], pushed.back())) {
      throw DomainError("zeta input is not ascending in the inner extension");
    }
  }
  (void)outer;
  return ExtTerm{std::move(c), ExtToken(pushed, s.token)};
}

ExtTerm Zeta(const PraeDilator& outer, const PraeDilator& inner, const LinearOrder& x,
             const ExtTerm& s) {
  auto inner_cmp = [&](const Token& a, const Token& b) {
    return ExtCompareWith(inner, a.arg(0).args(), a.arg(1), b.arg(0).args(), b.arg(1),
                          [&x](const Token& p, const Token& q) { return x.compare(p, q); });
  };
  for (std::size_t i = 0; i < s.support.size(); ++i) {
    if (!ExtMember(inner, x, s.support[i])) {
      throw DomainError("invalid inner term " + s.support[i].str());
    }
    if (i > 0 && inner_cmp(s.support[i - 1], s.support[i]) >= 0) {
      throw DomainError("outer support is not ascending");
    }
  }
  if (!HasFullSupport(outer, s.support.size(), s.token)) {
    throw DomainError("invalid outer token " + s.token.str());
  }
  return ZetaUnchecked(outer, inner, x, s);
}

ExtTerm ZetaInverse(const PraeDilator& outer, const PraeDilator& inner, const LinearOrder& x,
                    const ExtTerm& s) {
  for (const Token& e : s.support) {
    if (!x.valid(e)) throw DomainError(e.str() + " is not an element of " + x.name);
  }
  if (!IsStrictlyAscending(x, s.support)) throw DomainError("support is not ascending");
  ExtTerm body = ExtTerm::FromToken(s.token);
  const std::size_t k = s.support.size();
  std::vector<IndexSet> supps;
  for (std::size_t i = 0; i < body.support.size(); ++i) {
    const Token& rho = body.support[i];
    if (!inner.member(k, rho)) throw DomainError("invalid inner token " + rho.str());
    if (i > 0 && !inner.Less(k, body.support[i - 1], rho)) {
      throw DomainError("inner tokens are not ascending");
    }
    supps.push_back(inner.supp(k, rho));
  }
  if (!HasFullSupport(outer, body.support.size(), body.token)) {
    throw DomainError("invalid outer token " + body.token.str());
  }
  if (UnionOf(supps).size() != k) throw DomainError("support does not cover every parameter");

  std::vector<Token> outer_support;
  for (std::size_t i = 0; i < body.support.size(); ++i) {
    std::vector<Token> a;
    for (std::size_t j : supps[i]) a.push_back(s.support[j]);
    Token sigma = inner.pullback(FinEmbedding::FromRange(k, supps[i]), body.support[i]);
    outer_support.push_back(ExtToken(a, sigma));
  }
  return ExtTerm{std::move(outer_support), body.token};
}

Morphism IdentityMorphism(const Dilator& t) {
  return Morphism{"id", t, t, [](std::size_t, const Token& s) { return s; }};
}

namespace {

SuiteReport CheckMorphismImpl(const Morphism& nu, std::size_t max_n, std::size_t bound,
                              bool full, std::string suite) {
  const PraeDilator& src = *nu.source;
  const PraeDilator& dst = *nu.target;
  SuiteReport report(std::move(suite));
  report.parameters["morphism"] = nu.name;
  report.parameters["max_n"] = static_cast<std::int64_t>(max_n);
  report.parameters["bound"] = static_cast<std::int64_t>(bound);
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::vector<Token> pool = src.Members(n, bound);
    SafeSort(pool, [&](const Token& a, const Token& b) { return src.compare(n, a, b); });
    std::vector<Token> images;
    std::vector<bool> ok;
    for (const Token& s : pool) {
      report.checks += 2;
      Token image;
      try {
        image = nu.component(n, s);
      } catch (const std::invalid_argument& e) {
        report.Fail("component-domain", n, Witness({s}), e.what());
        images.push_back(Token());
        ok.push_back(false);
        continue;
      }
      images.push_back(image);
      bool member = dst.member(n, image);
      ok.push_back(member);
      if (!member) {
        report.Fail("component-member", n, Witness({s, image}));
        continue;
      }
      if (dst.supp(n, image) != src.supp(n, s)) report.Fail("cartesian", n, Witness({s, image}));
    }
    if (!full) continue;

    std::mutex mu;
    ParallelFor(pool.size(), [&](std::size_t begin, std::size_t end, std::size_t) {
      SuiteReport local;
      for (std::size_t i = begin; i < end; ++i) {
        if (!ok[i]) continue;
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
          if (!ok[j]) continue;
          ++local.checks;
          if (src.compare(n, pool[i], pool[j]) != dst.compare(n, images[i], images[j])) {
            local.Fail("component-embedding", n, Witness({pool[i], pool[j]}));
          }
        }
      }
      std::lock_guard<std::mutex> lock(mu);
      report.Absorb(local);
    });

    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!ok[i]) continue;
      for (std::size_t m = n; m <= max_n; ++m) {
        for (const FinEmbedding& f : AllEmbeddings(n, m)) {
          ++report.checks;
          try {
            if (nu.component(m, src.map(f, pool[i])) != dst.map(f, images[i])) {
              report.Fail("naturality", n, Witness({pool[i]}), "m=" + std::to_string(m));
            }
          } catch (const std::invalid_argument& e) {
            report.Fail("naturality", n, Witness({pool[i]}), e.what());
          }
        }
      }
    }
    if (src.is_normal() && dst.is_normal()) {
      for (std::size_t m = 0; m < n; ++m) {
        ++report.checks;
        Token mu_src = src.Mu(n, m);
        try {
          if (nu.component(n, mu_src) != dst.Mu(n, m)) {
            report.Fail("mu-compatible", n, Witness({mu_src}));
          }
        } catch (const std::invalid_argument& e) {
          report.Fail("mu-compatible", n, Witness({mu_src}), e.what());
        }
      }
    }
  }
  report.Canonicalize();
  return report;
}

}  // namespace

SuiteReport CheckMorphism(const Morphism& nu, std::size_t max_n, std::size_t bound) {
  return CheckMorphismImpl(nu, max_n, bound, true, "morphism");
}

SuiteReport CheckCartesian(const Morphism& nu, std::size_t max_n, std::size_t bound) {
  return CheckMorphismImpl(nu, max_n, bound, false, "cartesian");
}

CertifiedMorphism CertifyMorphism(Morphism nu, std::size_t max_n, std::size_t bound) {
  SuiteReport r = CheckMorphism(nu, max_n, bound);
  if (!r.pass()) throw ContractError("morphism " + nu.name + " failed certification: " + Summary(r));
  return CertifiedMorphism(std::move(nu), max_n, bound);
}

ExtTerm ExtMorphismUnchecked(const Morphism& nu, const ExtTerm& s) {
  return ExtTerm{s.support, nu.component(s.support.size(), s.token)};
}

ExtTerm ExtMorphism(const CertifiedMorphism& nu, const LinearOrder& x, const ExtTerm& s) {
  if (!ExtMember(*nu.morphism().source, x, s)) {
    throw DomainError("invalid extension term " + s.ToToken().str());
  }
  return ExtMorphismUnchecked(nu.morphism(), s);
}

Morphism LiftUnchecked(const Dilator& outer, const Morphism& nu) {
  Morphism lifted;
  lifted.name = outer->name + "(" + nu.name + ")";
  lifted.source = Compose(outer, nu.source);
  lifted.target = Compose(outer, nu.target);
  auto component = nu.component;
  lifted.component = [component](std::size_t n, const Token& tok) {
    std::vector<Token> image;
    for (const Token& e : tok.arg(0).args()) image.push_back(component(n, e));
    return ExtToken(image, tok.arg(1));
  };
  return lifted;
}

Morphism Lift(const Dilator& outer, const CertifiedMorphism& nu) {
  return LiftUnchecked(outer, nu.morphism());
}

UpperDerivative MakeUpperDerivative(const Dilator& base, const Dilator& target,
                                    std::function<Token(std::size_t, const Token&)> xi,
                                    std::string name) {
  Dilator composite = Compose(base, target);
  return UpperDerivative{base, target, composite,
                         Morphism{std::move(name), composite, target, std::move(xi)}};
}

SuiteReport CheckUpperDerivative(const UpperDerivative& u, std::size_t max_n, std::size_t bound) {
  if (!u.base->is_normal() || !u.target->is_normal()) {
    throw CapabilityError("upper derivatives need normal dilators on both sides");
  }
  SuiteReport report("upper-derivative");
  report.parameters["base"] = u.base->name;
  report.parameters["target"] = u.target->name;
  report.parameters["max_n"] = static_cast<std::int64_t>(max_n);
  report.parameters["bound"] = static_cast<std::int64_t>(bound);
  report.Absorb(CheckNormality(u.base, max_n, bound));
  report.Absorb(CheckNormality(u.target, max_n, bound));
  report.Absorb(CheckMorphism(u.xi, max_n, bound));

  for (std::size_t k = 1; k <= max_n; ++k) {
    OrderRef x = FiniteOrder(k);
    OrderRef inner_order = ExtOrder(u.target, x);
    for (const Token& e : x->enumerate_prefix(k)) {
      ++report.checks;
      ExtTerm expected = MuExt(*u.target, *x, e);
      ExtTerm outer = MuExt(*u.base, *inner_order, expected.ToToken());
      ExtTerm zeta = Zeta(*u.base, *u.target, *x, outer);
      ExtTerm result = ExtMorphismUnchecked(u.xi, zeta);
      if (result != expected) {
        report.Fail("mu-fixed-identity", k, Witness({e, result.ToToken(), expected.ToToken()}));
      }
    }
  }
  report.Canonicalize();
  return report;
}

CertifiedUpperDerivative CertifyUpperDerivative(UpperDerivative u, std::size_t max_n,
                                                std::size_t bound) {
  SuiteReport r = CheckUpperDerivative(u, max_n, bound);
  if (!r.pass()) {
    throw ContractError("upper derivative " + u.xi.name + " failed certification: " + Summary(r));
  }
  return CertifiedUpperDerivative(std::move(u), max_n, bound);
}

SuiteReport CheckUpperDerivativeMorphism(const UpperDerivative& from, const UpperDerivative& to,
                                         const Morphism& nu, std::size_t max_n,
                                         std::size_t bound) {
  SuiteReport report("upper-derivative-morphism");
  report.parameters["morphism"] = nu.name;
  report.parameters["max_n"] = static_cast<std::int64_t>(max_n);
  report.parameters["bound"] = static_cast<std::int64_t>(bound);
  report.Absorb(CheckMorphism(nu, max_n, bound));
  Morphism lifted = LiftUnchecked(from.base, nu);
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (const Token& s : from.composite->Members(n, bound)) {
      ++report.checks;
      try {
        Token lhs = nu.component(n, from.xi.component(n, s));
        Token rhs = to.xi.component(n, lifted.component(n, s));
        if (lhs != rhs) report.Fail("xi-commutes", n, Witness({s, lhs, rhs}));
      } catch (const std::invalid_argument& e) {
        report.Fail("xi-commutes", n, Witness({s}), e.what());
      }
    }
  }
  report.Canonicalize();
  return report;
}

UpperDerivative ZPlusUpperDerivative() {
  return MakeUpperDerivative(SegmentDilator(), ZPlusDilator(),
                             [](std::size_t, const Token& tok) {
                               if (!tok.is_tagged("ext", 2) || tok.arg(0).args().size() != 1) {
                                 throw DomainError("unexpected token " + tok.str());
                               }
                               const Token& sigma = tok.arg(0).arg(0);
                               if (sigma.is_tagged("z", 1)) {
                                 return ZToken(sigma.arg(0).as_int() + 1);
                               }
                               return sigma;
                             },
                             "zplus-shift");
}

}  // namespace dilator
