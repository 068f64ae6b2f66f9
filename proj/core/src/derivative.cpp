// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/derivative.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "dilator/checks.hpp"
#include "dilator/errors.hpp"

namespace dilator {

Token MuTerm(std::size_t m) { return Token::Tagged("mu", {Token::Int(static_cast<std::int64_t>(m))}); }

Token XiTerm(std::vector<Token> members, Token sigma) {
  return Token::Tagged("xi", {SetOf(std::move(members)), std::move(sigma)});
}

bool IsMuTerm(const Token& s) { return s.is_tagged("mu", 1) && s.arg(0).is_int() && s.arg(0).as_int() >= 0; }

bool IsXiTerm(const Token& s) { return s.is_tagged("xi", 2) && s.arg(0).is_tagged("set"); }

std::size_t MuIndex(const Token& s) {
  if (!IsMuTerm(s)) throw DomainError("expected (mu m), got " + s.str());
  return static_cast<std::size_t>(s.arg(0).as_int());
}

std::span<const Token> XiMembers(const Token& s) {
  if (!IsXiTerm(s)) throw DomainError("expected (xi (set ...) tok), got " + s.str());
  return s.arg(0).args();
}

const Token& XiToken(const Token& s) {
  if (!IsXiTerm(s)) throw DomainError("expected (xi (set ...) tok), got " + s.str());
  return s.arg(1);
}

Ordering DerivCompare(const PraeDilator& t, const Token& s, const Token& u) {
  if (s == u) return Ordering::equal;
  const bool s_mu = IsMuTerm(s);
  const bool u_mu = IsMuTerm(u);
  if (s_mu && u_mu) return MuIndex(s) <=> MuIndex(u);
  if (s_mu) {
    auto b = XiMembers(u);
    return !b.empty() && DerivCompare(t, s, b.back()) <= 0 ? Ordering::less : Ordering::greater;
  }
  if (u_mu) {
    auto a = XiMembers(s);
    return a.empty() || DerivCompare(t, a.back(), u) < 0 ? Ordering::less : Ordering::greater;
  }
  return ExtCompareWith(t, XiMembers(s), XiToken(s), XiMembers(u), XiToken(u),
                        [&t](const Token& p, const Token& q) { return DerivCompare(t, p, q); });
}

bool DerivMember(const PraeDilator& t, std::size_t n, const Token& s) {
  try {
    if (s.is_tagged("mu")) return IsMuTerm(s) && MuIndex(s) < n;
    if (!IsXiTerm(s)) return false;
    auto a = XiMembers(s);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!DerivMember(t, n, a[i])) return false;
      if (i > 0 && DerivCompare(t, a[i - 1], a[i]) >= 0) return false;
    }
    if (!HasFullSupport(t, a.size(), XiToken(s))) return false;
    return !(a.size() == 1 && IsMuTerm(a[0]) && XiToken(s) == t.Mu(1, 0));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::size_t DerivSize(const PraeDilator& t, const Token& s) {
  if (IsMuTerm(s)) return 1;
  std::size_t total = 1 + t.size(XiToken(s));
  for (const Token& r : XiMembers(s)) total += DerivSize(t, r);
  return total;
}

std::size_t DerivLength(const PraeDilator& t, const Token& s) {
  const std::size_t size = DerivSize(t, s);
  if (IsMuTerm(s)) return size;
  std::size_t sum = 1;
  for (const Token& r : XiMembers(s)) sum += 2 * DerivLength(t, r);
  return std::max(size, sum);
}

Token DerivMap(const FinEmbedding& f, const Token& s) {
  if (IsMuTerm(s)) return MuTerm(f(MuIndex(s)));
  std::vector<Token> image;
  for (const Token& r : XiMembers(s)) image.push_back(DerivMap(f, r));
  return XiTerm(std::move(image), XiToken(s));
}

Token DerivPullback(const FinEmbedding& f, const Token& s) {
  if (IsMuTerm(s)) {
    auto m = f.Preimage(MuIndex(s));
    if (!m) throw DomainError(s.str() + " is outside the range of the embedding");
    return MuTerm(*m);
  }
  std::vector<Token> pre;
  for (const Token& r : XiMembers(s)) pre.push_back(DerivPullback(f, r));
  return XiTerm(std::move(pre), XiToken(s));
}

namespace {

void CollectSupp(const Token& s, IndexSet& out) {
  if (IsMuTerm(s)) {
    out.push_back(MuIndex(s));
    return;
  }
  for (const Token& r : XiMembers(s)) CollectSupp(r, out);
}

}  // namespace

IndexSet DerivSupp(const Token& s) {
  IndexSet out;
  CollectSupp(s, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t DerivHeight(const Token& s) {
  if (IsMuTerm(s)) return 0;
  auto a = XiMembers(s);
  return a.empty() ? 1 : DerivHeight(a.back()) + 1;
}

namespace {

struct EnumerationCache {
  std::mutex mu;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Token>> table;
};

std::vector<Token> EnumerateTerms(const Dilator& t, std::size_t n, std::size_t bound) {
  auto cmp = [&t](const Token& a, const Token& b) { return DerivCompare(*t, a, b); };
  auto size = [&t](const Token& s) { return DerivSize(*t, s); };
  const Token mu10 = t->Mu(1, 0);
  std::vector<Token> pool;
  for (std::size_t b = 1; b <= bound; ++b) {
    std::vector<Token> next;
    for (std::size_t m = 0; m < n; ++m) next.push_back(MuTerm(m));
    for (ExtTerm& e : ExtEnumerate(*t, pool, b, size)) {
      if (e.support.size() == 1 && IsMuTerm(e.support[0]) && e.token == mu10) continue;
      next.push_back(XiTerm(std::move(e.support), std::move(e.token)));
    }
    SafeSort(next, cmp);
    pool = std::move(next);
  }
  return pool;
}

}  // namespace

Dilator Derivative(const Dilator& t) {
  if (!t->is_normal()) throw CapabilityError(t->name + " has no normal structure");
  PraeDilator d;
  d.name = "d:" + t->name;
  d.member = [t](std::size_t n, const Token& s) { return DerivMember(*t, n, s); };
  d.compare = [t](std::size_t, const Token& a, const Token& b) { return DerivCompare(*t, a, b); };
  d.map = [](const FinEmbedding& f, const Token& s) { return DerivMap(f, s); };
  d.supp = [](std::size_t, const Token& s) { return DerivSupp(s); };
  d.pullback = [](const FinEmbedding& f, const Token& s) { return DerivPullback(f, s); };
  d.size = [t](const Token& s) { return DerivSize(*t, s); };
  if (t->can_enumerate()) {
    auto cache = std::make_shared<EnumerationCache>();
    d.enumerate = [t, cache](std::size_t n, std::size_t bound) {
      const auto key = std::make_pair(n, bound);
      {
        std::lock_guard<std::mutex> lock(cache->mu);
        if (auto it = cache->table.find(key); it != cache->table.end()) return it->second;
      }
      std::vector<Token> terms = EnumerateTerms(t, n, bound);
      std::lock_guard<std::mutex> lock(cache->mu);
      cache->table.emplace(key, terms);
      return terms;
    };
  }
  d.mu = [](std::size_t, std::size_t m) { return MuTerm(m); };
  return std::make_shared<const PraeDilator>(std::move(d));
}

Token XiCollapse(const PraeDilator& t, const Token& ext) {
  if (!ext.is_tagged("ext", 2) || !ext.arg(0).is_tagged("set")) {
    throw DomainError("expected (ext (set ...) tok), got " + ext.str());
  }
  auto a = ext.arg(0).args();
  if (a.size() == 1 && IsMuTerm(a[0]) && ext.arg(1) == t.Mu(1, 0)) return a[0];
  return XiTerm(std::vector<Token>(a.begin(), a.end()), ext.arg(1));
}

Token XiExpand(const PraeDilator& t, const Token& s) {
  if (IsMuTerm(s)) return ExtToken(std::vector<Token>{s}, t.Mu(1, 0));
  auto a = XiMembers(s);
  return ExtToken(a, XiToken(s));
}

UpperDerivative DerivativeUpperDerivative(const Dilator& t) {
  return MakeUpperDerivative(
      t, Derivative(t), [t](std::size_t, const Token& ext) { return XiCollapse(*t, ext); },
      "xi:" + t->name);
}

namespace {

Token Universal(const UpperDerivative& u, std::size_t n, const Token& s) {
  if (IsMuTerm(s)) return u.target->Mu(n, MuIndex(s));
  std::vector<Token> image;
  for (const Token& r : XiMembers(s)) image.push_back(Universal(u, n, r));
  return u.xi.component(n, ExtToken(image, XiToken(s)));
}

}  // namespace

Morphism UniversalMorphism(const Dilator& t, const CertifiedUpperDerivative& target) {
  if (target.base() != t) {
    throw ContractError("upper derivative " + target.get().xi.name + " is not over " + t->name);
  }
  UpperDerivative u = target.get();
  return Morphism{"nu:" + u.target->name, Derivative(t), u.target,
                  [u](std::size_t n, const Token& s) { return Universal(u, n, s); }};
}

}  // namespace dilator
