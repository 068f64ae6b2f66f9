// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/orders.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "dilator/errors.hpp"

namespace dilator {

FinEmbedding::FinEmbedding(std::size_t codomain_size, std::vector<std::size_t> values)
    : codomain_(codomain_size), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= codomain_) {
      throw DomainError("embedding value " + std::to_string(values_[i]) + " outside codomain " +
                        std::to_string(codomain_));
    }
    if (i > 0 && values_[i - 1] >= values_[i]) {
      throw DomainError("embedding values are not strictly increasing");
    }
  }
}

FinEmbedding FinEmbedding::Identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return FinEmbedding(n, std::move(v));
}

FinEmbedding FinEmbedding::FromRange(std::size_t codomain_size, IndexSet range) {
  return FinEmbedding(codomain_size, std::move(range));
}

std::size_t FinEmbedding::operator()(std::size_t i) const {
  if (i >= values_.size()) {
    throw DomainError("argument " + std::to_string(i) + " outside embedding domain " +
                      std::to_string(values_.size()));
  }
  return values_[i];
}

FinEmbedding FinEmbedding::Then(const FinEmbedding& next) const {
  if (next.domain_size() != codomain_) throw DomainError("embeddings do not compose");
  std::vector<std::size_t> v;
  v.reserve(values_.size());
  for (std::size_t x : values_) v.push_back(next.values_[x]);
  return FinEmbedding(next.codomain_, std::move(v));
}

std::optional<std::size_t> FinEmbedding::Preimage(std::size_t v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - values_.begin());
}

FinEmbedding FinEmbedding::RestrictBelow(std::size_t n) const {
  if (n >= values_.size()) throw DomainError("restriction point outside domain");
  return FinEmbedding(values_[n], std::vector<std::size_t>(values_.begin(), values_.begin() + n));
}

bool FinEmbedding::IsIdentity() const {
  return values_.size() == codomain_ &&
         (values_.empty() || values_.back() + 1 == values_.size());
}

std::vector<FinEmbedding> AllEmbeddings(std::size_t n, std::size_t m) {
  std::vector<FinEmbedding> out;
  if (n > m) return out;
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  for (;;) {
    out.emplace_back(m, v);
    // Next n-combination of m in lexicographic order.
    std::size_t i = n;
    while (i > 0 && v[i - 1] == m - n + (i - 1)) --i;
    if (i == 0) break;
    ++v[i - 1];
    for (std::size_t j = i; j < n; ++j) v[j] = v[j - 1] + 1;
  }
  return out;
}

IndexSet FinsubsetImage(const FinEmbedding& f, std::span<const std::size_t> a) {
  IndexSet out;
  out.reserve(a.size());
  for (std::size_t x : a) out.push_back(f(x));
  std::sort(out.begin(), out.end());
  return out;
}

bool AllBelow(std::span<const std::size_t> a, std::size_t bound) {
  return std::all_of(a.begin(), a.end(), [&](std::size_t x) { return x < bound; });
}

namespace {

LinearOrder MakeOrder(std::string name, std::function<bool(const Token&)> valid,
                      std::function<Ordering(const Token&, const Token&)> compare) {
  LinearOrder o;
  o.name = std::move(name);
  o.valid = std::move(valid);
  o.compare = std::move(compare);
  return o;
}

bool IsNatural(const Token& t) { return t.is_int() && t.as_int() >= 0; }

}  // namespace

OrderRef Naturals() {
  static const OrderRef kNaturals = [] {
    LinearOrder o = MakeOrder("nat", IsNatural, [](const Token& a, const Token& b) {
      return a.as_int() <=> b.as_int();
    });
    o.enumerate_prefix = [](std::size_t count) {
      std::vector<Token> out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) out.push_back(Token::Int(static_cast<std::int64_t>(i)));
      return out;
    };
    return std::make_shared<const LinearOrder>(std::move(o));
  }();
  return kNaturals;
}

OrderRef FiniteOrder(std::size_t n) {
  const auto bound = static_cast<std::int64_t>(n);
  LinearOrder o = MakeOrder(
      std::to_string(n),
      [bound](const Token& t) { return t.is_int() && t.as_int() >= 0 && t.as_int() < bound; },
      [](const Token& a, const Token& b) { return a.as_int() <=> b.as_int(); });
  o.enumerate_prefix = [n](std::size_t count) {
    std::vector<Token> out;
    for (std::size_t i = 0; i < std::min(n, count); ++i) {
      out.push_back(Token::Int(static_cast<std::int64_t>(i)));
    }
    return out;
  };
  o.cardinality = n;
  return std::make_shared<const LinearOrder>(std::move(o));
}

OrderRef ListedOrder(std::string name, std::vector<Token> ascending) {
  auto index = std::make_shared<std::unordered_map<Token, std::size_t>>();
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    if (!index->emplace(ascending[i], i).second) {
      throw DomainError("duplicate element " + ascending[i].str() + " in listed order");
    }
  }
  auto elements = std::make_shared<const std::vector<Token>>(std::move(ascending));
  LinearOrder o = MakeOrder(
      std::move(name), [index](const Token& t) { return index->contains(t); },
      [index](const Token& a, const Token& b) {
        auto ia = index->find(a), ib = index->find(b);
        if (ia == index->end() || ib == index->end()) {
          throw DomainError("token outside listed order");
        }
        return ia->second <=> ib->second;
      });
  o.enumerate_prefix = [elements](std::size_t count) {
    return std::vector<Token>(elements->begin(),
                              elements->begin() + std::min(count, elements->size()));
  };
  o.cardinality = elements->size();
  return std::make_shared<const LinearOrder>(std::move(o));
}

OrderRef AdjoinBottom(OrderRef x) {
  LinearOrder o = MakeOrder(
      x->name + "^bot", [x](const Token& t) { return t.is_sym("bot") || x->valid(t); },
      [x](const Token& a, const Token& b) {
        bool ab = a.is_sym("bot"), bb = b.is_sym("bot");
        if (ab || bb) return static_cast<int>(!ab) <=> static_cast<int>(!bb);
        return x->compare(a, b);
      });
  if (x->can_enumerate()) {
    o.enumerate_prefix = [x](std::size_t count) {
      std::vector<Token> out;
      if (count == 0) return out;
      out.push_back(Bot());
      for (Token& t : x->enumerate_prefix(count - 1)) out.push_back(std::move(t));
      return out;
    };
  }
  if (x->cardinality) o.cardinality = *x->cardinality + 1;
  return std::make_shared<const LinearOrder>(std::move(o));
}

OrderRef AdjoinTop(OrderRef x) {
  LinearOrder o = MakeOrder(
      x->name + "^top", [x](const Token& t) { return t.is_sym("top") || x->valid(t); },
      [x](const Token& a, const Token& b) {
        bool at = a.is_sym("top"), bt = b.is_sym("top");
        if (at || bt) return static_cast<int>(at) <=> static_cast<int>(bt);
        return x->compare(a, b);
      });
  if (x->can_enumerate() && x->cardinality) {
    std::size_t card = *x->cardinality;
    o.enumerate_prefix = [x, card](std::size_t count) {
      std::vector<Token> out = x->enumerate_prefix(std::min(count, card));
      if (count > card) out.push_back(Top());
      return out;
    };
  }
  if (x->cardinality) o.cardinality = *x->cardinality + 1;
  return std::make_shared<const LinearOrder>(std::move(o));
}

OrderRef DependentSum(OrderRef x, std::function<OrderRef(const Token&)> family) {
  auto fam = std::make_shared<const std::function<OrderRef(const Token&)>>(std::move(family));
  auto lookup = [fam](const Token& t) {
    OrderRef y = (*fam)(t);
    if (!y) throw DomainError("dependent sum family undefined at " + t.str());
    return y;
  };
  LinearOrder o = MakeOrder(
      "sum(" + x->name + ")",
      [x, lookup](const Token& t) {
        if (!t.is_tagged("pair", 2) || !x->valid(t.arg(0))) return false;
        return lookup(t.arg(0))->valid(t.arg(1));
      },
      [x, lookup](const Token& a, const Token& b) {
        if (Ordering c = x->compare(a.arg(0), b.arg(0)); c != 0) return c;
        return lookup(a.arg(0))->compare(a.arg(1), b.arg(1));
      });
  if (x->can_enumerate()) {
    o.enumerate_prefix = [x, lookup](std::size_t count) {
      // Only well defined when every fiber is finite.
      std::vector<Token> out;
      std::size_t taken = 0;
      for (const Token& first : x->enumerate_prefix(count)) {
        OrderRef y = lookup(first);
        if (!y->cardinality || !y->can_enumerate()) {
          throw CapabilityError("dependent sum enumeration needs finite fibers");
        }
        for (Token& second : y->enumerate_prefix(*y->cardinality)) {
          if (taken == count) return out;
          out.push_back(Pair(first, std::move(second)));
          ++taken;
        }
      }
      return out;
    };
  }
  return std::make_shared<const LinearOrder>(std::move(o));
}

OrderRef Product(OrderRef x, OrderRef y) {
  OrderRef sum = DependentSum(x, [y](const Token&) { return y; });
  LinearOrder o = *sum;
  o.name = x->name + "*" + y->name;
  if (!(y->cardinality && y->can_enumerate())) o.enumerate_prefix = nullptr;
  if (x->cardinality && y->cardinality) o.cardinality = *x->cardinality * *y->cardinality;
  return std::make_shared<const LinearOrder>(std::move(o));
}

OrderRef RestrictBelow(OrderRef x, Token bound) {
  if (!x->valid(bound)) throw DomainError("restriction bound " + bound.str() + " not in order");
  LinearOrder o = MakeOrder(
      x->name + "|" + bound.str(),
      [x, bound](const Token& t) { return x->valid(t) && x->less(t, bound); },
      [x](const Token& a, const Token& b) { return x->compare(a, b); });
  if (x->can_enumerate()) {
    o.enumerate_prefix = [x, bound](std::size_t count) {
      std::vector<Token> prefix = x->enumerate_prefix(count);
      std::vector<Token> out;
      for (Token& t : prefix) {
        if (!x->less(t, bound)) break;
        out.push_back(std::move(t));
      }
      return out;
    };
  }
  return std::make_shared<const LinearOrder>(std::move(o));
}

std::vector<Token> CanonicalSet(const LinearOrder& order, std::vector<Token> elements) {
  for (const Token& t : elements) {
    if (!order.valid(t)) throw DomainError(t.str() + " is not an element of " + order.name);
  }
  std::sort(elements.begin(), elements.end(),
            [&](const Token& a, const Token& b) { return order.less(a, b); });
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (order.compare(elements[i - 1], elements[i]) == 0) {
      throw DomainError("duplicate set element " + elements[i].str());
    }
  }
  return elements;
}

bool IsStrictlyAscending(const LinearOrder& order, std::span<const Token> elements) {
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (!order.less(elements[i - 1], elements[i])) return false;
  }
  return true;
}

FinEmbedding AbsOfEmbedding(std::span<const Token> a, std::span<const Token> b,
                            const LinearOrder& order) {
  std::vector<std::size_t> positions;
  positions.reserve(a.size());
  std::size_t j = 0;
  for (const Token& x : a) {
    while (j < b.size() && order.less(b[j], x)) ++j;
    if (j == b.size() || order.compare(b[j], x) != 0) {
      throw DomainError(x.str() + " is missing from the superset");
    }
    positions.push_back(j++);
  }
  return FinEmbedding(b.size(), std::move(positions));
}

bool FinBelow(std::span<const Token> a, const Token& x, const LinearOrder& order) {
  return std::all_of(a.begin(), a.end(), [&](const Token& y) { return order.less(y, x); });
}

bool FinLess(std::span<const Token> a, std::span<const Token> b, const LinearOrder& order) {
  return std::all_of(a.begin(), a.end(), [&](const Token& x) {
    return std::any_of(b.begin(), b.end(), [&](const Token& y) { return order.less(x, y); });
  });
}

bool FinLessEq(std::span<const Token> a, std::span<const Token> b, const LinearOrder& order) {
  return std::all_of(a.begin(), a.end(), [&](const Token& x) {
    return std::any_of(b.begin(), b.end(),
                       [&](const Token& y) { return order.compare(x, y) <= 0; });
  });
}

Ordering KbCompare(const LinearOrder& base, const Token& s, const Token& t) {
  auto se = SeqEntries(s), te = SeqEntries(t);
  for (const Token& e : se) {
    if (!base.valid(e)) throw DomainError("invalid sequence entry " + e.str());
  }
  for (const Token& e : te) {
    if (!base.valid(e)) throw DomainError("invalid sequence entry " + e.str());
  }
  std::size_t common = std::min(se.size(), te.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (Ordering c = base.compare(se[i], te[i]); c != 0) return c;
  }
  // One is an end extension of the other; the longer one is smaller.
  return te.size() <=> se.size();
}

OrderRef KleeneBrouwer(OrderRef base) {
  LinearOrder o = MakeOrder(
      "kb(" + base->name + ")",
      [base](const Token& t) {
        if (!t.is_tagged("seq")) return false;
        auto e = t.args();
        return std::all_of(e.begin(), e.end(), [&](const Token& x) { return base->valid(x); });
      },
      [base](const Token& a, const Token& b) { return KbCompare(*base, a, b); });
  return std::make_shared<const LinearOrder>(std::move(o));
}

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t CheckedAdd(std::uint64_t a, std::uint64_t b) {
  if (a > kMax - b) throw DomainError("sequence code overflow");
  return a + b;
}

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) throw DomainError("sequence code overflow");
  return a * b;
}

// Largest w with w(w+1)/2 <= z.
std::uint64_t TriangularRoot(std::uint64_t z) {
  std::uint64_t lo = 0, hi = 1;
  while (hi * (hi + 1) / 2 <= z) {
    lo = hi;
    hi *= 2;
    if (hi > (1ULL << 32)) {
      hi = 1ULL << 32;
      break;
    }
  }
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid * (mid + 1) / 2 <= z) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

std::uint64_t CantorPair(std::uint64_t x, std::uint64_t y) {
  std::uint64_t s = CheckedAdd(x, y);
  std::uint64_t s1 = CheckedAdd(s, 1);
  std::uint64_t tri = (s % 2 == 0) ? CheckedMul(s / 2, s1) : CheckedMul(s, s1 / 2);
  return CheckedAdd(tri, y);
}

std::pair<std::uint64_t, std::uint64_t> CantorUnpair(std::uint64_t z) {
  std::uint64_t w = TriangularRoot(z);
  std::uint64_t y = z - w * (w + 1) / 2;
  return {w - y, y};
}

std::uint64_t SequenceCode(std::span<const std::uint64_t> seq) {
  std::uint64_t code = 0;
  for (std::uint64_t v : seq) code = CheckedAdd(CantorPair(code, v), 1);
  return code;
}

std::vector<std::uint64_t> SequenceDecode(std::uint64_t code) {
  std::vector<std::uint64_t> rev;
  while (code != 0) {
    auto [prefix, last] = CantorUnpair(code - 1);
    rev.push_back(last);
    code = prefix;
  }
  return {rev.rbegin(), rev.rend()};
}

std::optional<std::vector<Token>> TopologicalSort(
    std::span<const Token> pool, const std::function<bool(const Token&, const Token&)>& less) {
  const std::size_t n = pool.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && less(pool[i], pool[j])) {
        succ[i].push_back(j);
        ++indegree[j];
      }
    }
    if (less(pool[i], pool[i])) return std::nullopt;
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::vector<Token> out;
  out.reserve(n);
  while (!ready.empty()) {
    std::size_t i = ready.back();
    ready.pop_back();
    out.push_back(pool[i]);
    for (std::size_t j : succ[i]) {
      if (--indegree[j] == 0) ready.push_back(j);
    }
  }
  if (out.size() != n) return std::nullopt;
  return out;
}

}  // namespace dilator
