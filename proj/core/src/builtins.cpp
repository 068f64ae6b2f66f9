// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "dilator/errors.hpp"
#include "dilator/praedil.hpp"

namespace dilator {

namespace {

bool IsIndexBelow(const Token& t, std::size_t n) {
  return t.is_int() && t.as_int() >= 0 && static_cast<std::size_t>(t.as_int()) < n;
}

std::size_t Index(const Token& t) { return static_cast<std::size_t>(t.as_int()); }

Token IndexToken(std::size_t i) { return Token::Int(static_cast<std::int64_t>(i)); }

std::size_t PullIndex(const FinEmbedding& f, const Token& t) {
  auto pre = f.Preimage(Index(t));
  if (!pre) throw DomainError("support of " + t.str() + " not inside the range of the embedding");
  return *pre;
}

// --- omega ---------------------------------------------------------------

bool OmegaMember(std::size_t n, const Token& s) {
  if (!s.is_tagged("seq")) return false;
  auto e = s.args();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!IsIndexBelow(e[i], n)) return false;
    if (i > 0 && e[i - 1].as_int() < e[i].as_int()) return false;
  }
  return true;
}

Ordering OmegaCompare(std::size_t, const Token& a, const Token& b) {
  auto x = a.args(), y = b.args();
  std::size_t common = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (Ordering c = x[i].as_int() <=> y[i].as_int(); c != 0) return c;
  }
  return x.size() <=> y.size();
}

void OmegaExtend(std::vector<std::int64_t>& prefix, std::int64_t max_entry, std::size_t bound,
                 std::vector<Token>& out) {
  out.push_back(SeqOf(prefix));
  if (prefix.size() == bound) return;
  for (std::int64_t v = 0; v <= max_entry; ++v) {
    prefix.push_back(v);
    OmegaExtend(prefix, v, bound, out);
    prefix.pop_back();
  }
}

// --- zplus ---------------------------------------------------------------

bool IsZ(const Token& t) { return t.is_tagged("z", 1) && t.arg(0).is_int(); }

}  // namespace

Token ZToken(std::int64_t p) { return Token::Tagged("z", {Token::Int(p)}); }

std::vector<Token> PraeDilator::Members(std::size_t n, std::size_t bound) const {
  if (!enumerate) throw CapabilityError(name + " has no enumeration");
  return enumerate(n, bound);
}

Token PraeDilator::Mu(std::size_t n, std::size_t m) const {
  if (!mu) throw CapabilityError(name + " has no normal structure");
  if (m >= n) throw DomainError("mu index " + std::to_string(m) + " not below " + std::to_string(n));
  return mu(n, m);
}

OrderRef DilatorOrder(const Dilator& t, std::size_t n) {
  LinearOrder o;
  o.name = t->name + "_" + std::to_string(n);
  o.valid = [t, n](const Token& s) { return t->member(n, s); };
  o.compare = [t, n](const Token& a, const Token& b) { return t->compare(n, a, b); };
  return std::make_shared<const LinearOrder>(std::move(o));
}

Dilator OmegaDilator() {
  static const Dilator kOmega = [] {
    PraeDilator d;
    d.name = "omega";
    d.member = OmegaMember;
    d.compare = OmegaCompare;
    d.map = [](const FinEmbedding& f, const Token& s) {
      std::vector<Token> e;
      for (const Token& x : s.args()) e.push_back(IndexToken(f(Index(x))));
      return Seq(std::move(e));
    };
    d.supp = [](std::size_t, const Token& s) {
      IndexSet out;
      for (const Token& x : s.args()) out.push_back(Index(x));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    d.pullback = [](const FinEmbedding& f, const Token& s) {
      std::vector<Token> e;
      for (const Token& x : s.args()) e.push_back(IndexToken(PullIndex(f, x)));
      return Seq(std::move(e));
    };
    d.size = [](const Token& s) { return s.args().size(); };
    d.enumerate = [](std::size_t n, std::size_t bound) {
      std::vector<Token> out;
      std::vector<std::int64_t> prefix;
      if (n == 0) {
        out.push_back(SeqOf(prefix));
      } else {
        OmegaExtend(prefix, static_cast<std::int64_t>(n) - 1, bound, out);
      }
      return out;
    };
    d.mu = [](std::size_t, std::size_t m) { return Seq({IndexToken(m)}); };
    return std::make_shared<const PraeDilator>(std::move(d));
  }();
  return kOmega;
}

Dilator BumpDilator() {
  static const Dilator kBump = [] {
    static const Token kOmegaTop = Token::Sym("Omega");
    PraeDilator d;
    d.name = "bump";
    d.member = [](std::size_t n, const Token& s) { return s == kOmegaTop || IsIndexBelow(s, n); };
    d.compare = [](std::size_t, const Token& a, const Token& b) {
      bool at = a.is_sym(), bt = b.is_sym();
      if (at || bt) return static_cast<int>(at) <=> static_cast<int>(bt);
      return a.as_int() <=> b.as_int();
    };
    d.map = [](const FinEmbedding& f, const Token& s) {
      return s.is_sym() ? s : IndexToken(f(Index(s)));
    };
    d.supp = [](std::size_t, const Token& s) {
      return s.is_sym() ? IndexSet{} : IndexSet{Index(s)};
    };
    d.pullback = [](const FinEmbedding& f, const Token& s) {
      return s.is_sym() ? s : IndexToken(PullIndex(f, s));
    };
    d.size = [](const Token&) { return std::size_t{1}; };
    d.enumerate = [](std::size_t n, std::size_t bound) {
      std::vector<Token> out;
      if (bound == 0) return out;
      for (std::size_t i = 0; i < n; ++i) out.push_back(IndexToken(i));
      out.push_back(kOmegaTop);
      return out;
    };
    return std::make_shared<const PraeDilator>(std::move(d));
  }();
  return kBump;
}

Dilator SegmentDilator() {
  static const Dilator kSegment = [] {
    PraeDilator d;
    d.name = "segment";
    d.member = [](std::size_t n, const Token& s) { return IsIndexBelow(s, n); };
    d.compare = [](std::size_t, const Token& a, const Token& b) { return a.as_int() <=> b.as_int(); };
    d.map = [](const FinEmbedding& f, const Token& s) { return IndexToken(f(Index(s))); };
    d.supp = [](std::size_t, const Token& s) { return IndexSet{Index(s)}; };
    d.pullback = [](const FinEmbedding& f, const Token& s) { return IndexToken(PullIndex(f, s)); };
    d.size = [](const Token&) { return std::size_t{1}; };
    d.enumerate = [](std::size_t n, std::size_t bound) {
      std::vector<Token> out;
      if (bound == 0) return out;
      for (std::size_t i = 0; i < n; ++i) out.push_back(IndexToken(i));
      return out;
    };
    d.mu = [](std::size_t, std::size_t m) { return IndexToken(m); };
    return std::make_shared<const PraeDilator>(std::move(d));
  }();
  return kSegment;
}

Dilator ZPlusDilator() {
  static const Dilator kZPlus = [] {
    PraeDilator d;
    d.name = "zplus";
    d.member = [](std::size_t n, const Token& s) { return IsZ(s) || IsIndexBelow(s, n); };
    d.compare = [](std::size_t, const Token& a, const Token& b) {
      bool az = IsZ(a), bz = IsZ(b);
      if (az && bz) return a.arg(0).as_int() <=> b.arg(0).as_int();
      if (az || bz) return static_cast<int>(bz) <=> static_cast<int>(az);
      return a.as_int() <=> b.as_int();
    };
    d.map = [](const FinEmbedding& f, const Token& s) {
      return IsZ(s) ? s : IndexToken(f(Index(s)));
    };
    d.supp = [](std::size_t, const Token& s) { return IsZ(s) ? IndexSet{} : IndexSet{Index(s)}; };
    d.pullback = [](const FinEmbedding& f, const Token& s) {
      return IsZ(s) ? s : IndexToken(PullIndex(f, s));
    };
    d.size = [](const Token& s) {
      return IsZ(s) ? 1 + static_cast<std::size_t>(std::llabs(s.arg(0).as_int())) : std::size_t{1};
    };
    d.enumerate = [](std::size_t n, std::size_t bound) {
      std::vector<Token> out;
      if (bound == 0) return out;
      auto reach = static_cast<std::int64_t>(bound - 1);
      for (std::int64_t p = -reach; p <= reach; ++p) out.push_back(ZToken(p));
      for (std::size_t i = 0; i < n; ++i) out.push_back(IndexToken(i));
      return out;
    };
    d.mu = [](std::size_t, std::size_t m) { return IndexToken(m); };
    return std::make_shared<const PraeDilator>(std::move(d));
  }();
  return kZPlus;
}

Dilator StarDilator() {
  static const Dilator kStar = [] {
    static const Token kStarToken = Token::Sym("star");
    PraeDilator d;
    d.name = "star";
    d.member = [](std::size_t, const Token& s) { return s == kStarToken; };
    d.compare = [](std::size_t, const Token&, const Token&) { return std::strong_ordering::equal; };
    d.map = [](const FinEmbedding&, const Token& s) { return s; };
    d.supp = [](std::size_t, const Token&) { return IndexSet{}; };
    d.pullback = [](const FinEmbedding&, const Token& s) { return s; };
    d.size = [](const Token&) { return std::size_t{0}; };
    d.enumerate = [](std::size_t, std::size_t) { return std::vector<Token>{kStarToken}; };
    return std::make_shared<const PraeDilator>(std::move(d));
  }();
  return kStar;
}

}  // namespace dilator
