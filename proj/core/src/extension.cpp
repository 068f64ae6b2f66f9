// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/extension.hpp"

#include <mutex>
#include <numeric>
#include <unordered_map>

#include "dilator/errors.hpp"

namespace dilator {

Token ExtToken(std::span<const Token> support, const Token& sigma) {
  return Token::Tagged("ext", {SetOf(std::vector<Token>(support.begin(), support.end())), sigma});
}

Token ExtTerm::ToToken() const { return ExtToken(support, token); }

ExtTerm ExtTerm::FromToken(const Token& t) {
  if (!t.is_tagged("ext", 2) || !t.arg(0).is_tagged("set")) {
    throw DomainError("expected (ext (set ...) tok), got " + t.str());
  }
  auto entries = t.arg(0).args();
  return ExtTerm{std::vector<Token>(entries.begin(), entries.end()), t.arg(1)};
}

bool HasFullSupport(const PraeDilator& t, std::size_t k, const Token& sigma) {
  if (!t.member(k, sigma)) return false;
  IndexSet supp = t.supp(k, sigma);
  if (supp.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (supp[i] != i) return false;
  }
  return true;
}

bool ExtMember(const PraeDilator& t, const LinearOrder& x, const ExtTerm& s) {
  for (const Token& e : s.support) {
    if (!x.valid(e)) return false;
  }
  if (!IsStrictlyAscending(x, s.support)) return false;
  return HasFullSupport(t, s.support.size(), s.token);
}

bool ExtMember(const PraeDilator& t, const LinearOrder& x, const Token& candidate) {
  if (!candidate.is_tagged("ext", 2) || !candidate.arg(0).is_tagged("set")) return false;
  try {
    return ExtMember(t, x, ExtTerm::FromToken(candidate));
  } catch (const DomainError&) {
    return false;
  }
}

ExtTerm MakeExt(const PraeDilator& t, const LinearOrder& x, std::vector<Token> support,
                Token sigma) {
  ExtTerm s{CanonicalSet(x, std::move(support)), std::move(sigma)};
  if (!HasFullSupport(t, s.support.size(), s.token)) {
    throw DomainError("token " + s.token.str() + " is not a full-support member of " + t.name +
                      "_" + std::to_string(s.support.size()));
  }
  return s;
}

Ordering ExtCompareUnchecked(const PraeDilator& t, const LinearOrder& x, const ExtTerm& s,
                             const ExtTerm& u) {
  return ExtCompareWith(t, s.support, s.token, u.support, u.token,
                        [&x](const Token& a, const Token& b) { return x.compare(a, b); });
}

Ordering ExtCompare(const PraeDilator& t, const LinearOrder& x, const ExtTerm& s, const ExtTerm& u) {
  if (!ExtMember(t, x, s)) throw DomainError("invalid extension term " + s.ToToken().str());
  if (!ExtMember(t, x, u)) throw DomainError("invalid extension term " + u.ToToken().str());
  return ExtCompareUnchecked(t, x, s, u);
}

OrderRef ExtOrder(const Dilator& t, OrderRef x) {
  LinearOrder o;
  o.name = "D[" + t->name + "](" + x->name + ")";
  o.valid = [t, x](const Token& c) { return ExtMember(*t, *x, c); };
  o.compare = [t, x](const Token& a, const Token& b) {
    return ExtCompareWith(*t, SetEntries(a.arg(0)), a.arg(1), SetEntries(b.arg(0)), b.arg(1),
                          [&x](const Token& p, const Token& q) { return x->compare(p, q); });
  };
  return std::make_shared<const LinearOrder>(std::move(o));
}

OrderEmbedding FiniteEmbedding(const FinEmbedding& f) {
  OrderEmbedding e;
  e.source = FiniteOrder(f.domain_size());
  e.target = FiniteOrder(f.codomain_size());
  e.apply = [f](const Token& t) {
    return Token::Int(static_cast<std::int64_t>(f(static_cast<std::size_t>(t.as_int()))));
  };
  e.preimage = [f](const Token& t) -> std::optional<Token> {
    if (!t.is_int() || t.as_int() < 0) return std::nullopt;
    auto p = f.Preimage(static_cast<std::size_t>(t.as_int()));
    if (!p) return std::nullopt;
    return Token::Int(static_cast<std::int64_t>(*p));
  };
  return e;
}

ExtTerm ExtMap(const PraeDilator& t, const OrderEmbedding& f, const ExtTerm& s) {
  if (!ExtMember(t, *f.source, s)) throw DomainError("invalid extension term " + s.ToToken().str());
  std::vector<Token> image;
  image.reserve(s.support.size());
  for (const Token& e : s.support) {
    Token y = f.apply(e);
    if (!f.target->valid(y)) throw DomainError("image " + y.str() + " outside the target order");
    image.push_back(std::move(y));
  }
  if (!IsStrictlyAscending(*f.target, image)) {
    throw DomainError("map is not order preserving on " + SetOf(s.support).str());
  }
  return ExtTerm{std::move(image), s.token};
}

namespace {

IndexSet Indices(std::span<const Token> support, std::size_t n) {
  IndexSet out;
  out.reserve(support.size());
  for (const Token& e : support) {
    if (!e.is_int() || e.as_int() < 0 || static_cast<std::size_t>(e.as_int()) >= n) {
      throw DomainError(e.str() + " is not an element of " + std::to_string(n));
    }
    out.push_back(static_cast<std::size_t>(e.as_int()));
  }
  return out;
}

}  // namespace

Token Eta(const PraeDilator& t, std::size_t n, const ExtTerm& s) {
  return t.map(FinEmbedding::FromRange(n, Indices(s.support, n)), s.token);
}

ExtTerm EtaInverse(const PraeDilator& t, std::size_t n, const Token& sigma) {
  if (!t.member(n, sigma)) throw DomainError(sigma.str() + " is not a member of " + t.name);
  IndexSet supp = t.supp(n, sigma);
  Token sigma0 = t.pullback(FinEmbedding::FromRange(n, supp), sigma);
  std::vector<Token> support;
  support.reserve(supp.size());
  for (std::size_t i : supp) support.push_back(Token::Int(static_cast<std::int64_t>(i)));
  return ExtTerm{std::move(support), std::move(sigma0)};
}

ExtTerm MuExt(const PraeDilator& t, const LinearOrder& x, const Token& element) {
  if (!x.valid(element)) throw DomainError(element.str() + " is not an element of " + x.name);
  return ExtTerm{{element}, t.Mu(1, 0)};
}

RangePartition RangeFilter([[maybe_unused]] const PraeDilator& t, const OrderEmbedding& f,
                           std::span<const ExtTerm> terms) {
  RangePartition out;
  for (const ExtTerm& s : terms) {
    std::vector<Token> pre;
    bool inside = true;
    for (const Token& y : s.support) {
      std::optional<Token> x = f.preimage(y);
      if (!x) {
        inside = false;
        break;
      }
      pre.push_back(std::move(*x));
    }
    if (inside) {
      out.in_range.emplace_back(s, ExtTerm{std::move(pre), s.token});
    } else {
      out.outside.push_back(s);
    }
  }
  return out;
}

std::size_t ExtSize(const PraeDilator& t, const ExtTerm& s,
                    const std::function<std::size_t(const Token&)>& element_size) {
  std::size_t total = 1 + t.size(s.token);
  for (const Token& e : s.support) total += element_size(e);
  return total;
}

namespace {

struct ExtEnumerator {
  const PraeDilator& t;
  std::span<const Token> pool;
  std::vector<std::size_t> sizes;
  std::size_t bound;
  // Full-support members of T_k, with their sizes, by k.
  std::vector<std::vector<std::pair<Token, std::size_t>>> tokens;
  std::vector<Token> chosen;
  std::vector<ExtTerm> out;

  const std::vector<std::pair<Token, std::size_t>>& TokensOf(std::size_t k) {
    while (tokens.size() <= k) {
      std::size_t j = tokens.size();
      std::vector<std::pair<Token, std::size_t>> list;
      if (bound >= 1) {
        for (Token& s : t.Members(j, bound - 1)) {
          if (HasFullSupport(t, j, s)) {
            std::size_t sz = t.size(s);
            list.emplace_back(std::move(s), sz);
          }
        }
      }
      tokens.push_back(std::move(list));
    }
    return tokens[k];
  }

  void Emit(std::size_t used) {
    for (const auto& [s, sz] : TokensOf(chosen.size())) {
      if (used + sz <= bound) out.push_back(ExtTerm{chosen, s});
    }
  }

  void Walk(std::size_t from, std::size_t used) {
    Emit(used);
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (used + sizes[i] > bound) continue;
      chosen.push_back(pool[i]);
      Walk(i + 1, used + sizes[i]);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<ExtTerm> ExtEnumerate(const PraeDilator& t, std::span<const Token> pool,
                                  std::size_t bound,
                                  const std::function<std::size_t(const Token&)>& element_size) {
  ExtEnumerator e{t, pool, {}, bound, {}, {}, {}};
  e.sizes.reserve(pool.size());
  for (const Token& x : pool) e.sizes.push_back(element_size(x));
  if (bound >= 1) e.Walk(0, 1);
  return std::move(e.out);
}

std::vector<ExtTerm> ExtEnumerateFinite(const PraeDilator& t, std::size_t n, std::size_t bound) {
  std::vector<Token> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(Token::Int(static_cast<std::int64_t>(i)));
  return ExtEnumerate(t, pool, bound, [](const Token&) { return std::size_t{1}; });
}

namespace {

struct MemoKey {
  std::size_t n;
  Token a;
  Token b;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    return (k.a.hash() * 31 + k.b.hash()) * 1000003 + k.n;
  }
};

struct CompareMemo {
  std::mutex mu;
  std::unordered_map<MemoKey, Ordering, MemoKeyHash> table;
};

}  // namespace

Dilator WithCompareMemo(const Dilator& t, std::size_t max_entries) {
  auto memo = std::make_shared<CompareMemo>();
  PraeDilator d = *t;
  d.compare = [t, memo, max_entries](std::size_t n, const Token& a, const Token& b) {
    MemoKey key{n, a, b};
    {
      std::lock_guard<std::mutex> lock(memo->mu);
      if (auto it = memo->table.find(key); it != memo->table.end()) return it->second;
    }
    Ordering result = t->compare(n, a, b);
    std::lock_guard<std::mutex> lock(memo->mu);
    if (memo->table.size() >= max_entries) memo->table.clear();
    memo->table.emplace(std::move(key), result);
    return result;
  };
  return std::make_shared<const PraeDilator>(std::move(d));
}

}  // namespace dilator
