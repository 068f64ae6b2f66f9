// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/barind.hpp"

#include <algorithm>

#include "json.hpp"

#include "dilator/checks.hpp"
#include "dilator/derivative.hpp"
#include "dilator/errors.hpp"

namespace dilator {

namespace {

Ordering KbNat(std::span<const std::uint64_t> s, std::span<const std::uint64_t> t) {
  const std::size_t common = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (s[i] != t[i]) return s[i] <=> t[i];
  }
  return t.size() <=> s.size();
}

std::uint64_t AsNat(const Token& t) {
  if (!t.is_int() || t.as_int() < 0) throw DomainError("expected a natural number, got " + t.str());
  return static_cast<std::uint64_t>(t.as_int());
}

Token Nat(std::uint64_t v) { return Token::Int(static_cast<std::int64_t>(v)); }

}  // namespace

Token SumElement(const Token& x, std::span<const std::uint64_t> seq) {
  std::vector<Token> entries;
  entries.reserve(seq.size());
  for (std::uint64_t v : seq) entries.push_back(Nat(v));
  return Pair(x, Seq(std::move(entries)));
}

NatSeq SumSequence(const Token& element) {
  if (!element.is_tagged("pair", 2)) throw DomainError("expected (pair x (seq ...)), got " + element.str());
  NatSeq out;
  for (const Token& e : SeqEntries(element.arg(1))) out.push_back(AsNat(e));
  return out;
}

TreeFamily::TreeFamily(std::vector<Token> elements, std::map<Token, std::vector<NatSeq>> trees)
    : elements_(std::move(elements)) {
  order_ = ListedOrder("X", elements_);
  trees_.resize(elements_.size());
  lookup_.resize(elements_.size());
  for (auto& [x, nodes] : trees) {
    const std::size_t i = index_of(x);
    std::set<NatSeq> set(nodes.begin(), nodes.end());
    for (const NatSeq& s : set) {
      if (!s.empty() && !set.contains(NatSeq(s.begin(), s.end() - 1))) {
        throw DomainError("tree at " + x.str() + " is not closed under prefixes");
      }
    }
    trees_[i].assign(set.begin(), set.end());
    std::sort(trees_[i].begin(), trees_[i].end(),
              [](const NatSeq& a, const NatSeq& b) { return KbNat(a, b) < 0; });
    lookup_[i] = std::move(set);
  }
}

TreeFamily TreeFamily::FromJson(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("family json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc["order"].is_array()) {
    throw ParseError("family json needs an \"order\" array");
  }
  std::vector<Token> elements;
  for (const auto& e : doc["order"]) {
    if (!e.is_string()) throw ParseError("order entries must be strings");
    elements.push_back(Token::Parse(e.get<std::string>()));
  }
  std::map<Token, std::vector<NatSeq>> trees;
  if (doc.contains("trees")) {
    if (!doc["trees"].is_object()) throw ParseError("\"trees\" must be an object");
    for (const auto& [key, nodes] : doc["trees"].items()) {
      if (!nodes.is_array()) throw ParseError("tree " + key + " must be an array of sequences");
      std::vector<NatSeq>& out = trees[Token::Parse(key)];
      for (const auto& node : nodes) {
        if (!node.is_array()) throw ParseError("tree nodes must be arrays");
        NatSeq s;
        for (const auto& v : node) {
          if (!v.is_number_unsigned()) throw ParseError("tree entries must be natural numbers");
          s.push_back(v.get<std::uint64_t>());
        }
        out.push_back(std::move(s));
      }
    }
  }
  try {
    return TreeFamily(std::move(elements), std::move(trees));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::size_t TreeFamily::index_of(const Token& x) const {
  auto it = std::find(elements_.begin(), elements_.end(), x);
  if (it == elements_.end()) throw DomainError(x.str() + " is not an element of X");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool TreeFamily::contains(std::size_t x_index, std::span<const std::uint64_t> seq) const {
  return x_index < lookup_.size() && lookup_[x_index].contains(NatSeq(seq.begin(), seq.end()));
}

std::vector<Token> TreeFamily::SumElements() const {
  std::vector<Token> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const NatSeq& s : trees_[i]) out.push_back(SumElement(elements_[i], s));
  }
  return out;
}

std::vector<Token> TreeFamily::SumElementsBelow(const Token& x) const {
  const std::size_t limit = index_of(x);
  std::vector<Token> out;
  for (std::size_t i = 0; i < limit; ++i) {
    for (const NatSeq& s : trees_[i]) out.push_back(SumElement(elements_[i], s));
  }
  return out;
}

Ordering TreeFamily::SumCompare(const Token& a, const Token& b) const {
  const std::size_t ia = index_of(a.arg(0)), ib = index_of(b.arg(0));
  if (ia != ib) return ia <=> ib;
  return KbNat(SumSequence(a), SumSequence(b));
}

OrderRef TreeFamily::SumOrder() const {
  auto self = std::make_shared<const TreeFamily>(*this);
  LinearOrder o;
  o.name = "Sum";
  o.valid = [self](const Token& t) {
    try {
      return t.is_tagged("pair", 2) && self->contains(self->index_of(t.arg(0)), SumSequence(t));
    } catch (const DomainError&) {
      return false;
    }
  };
  o.compare = [self](const Token& a, const Token& b) { return self->SumCompare(a, b); };
  auto all = std::make_shared<const std::vector<Token>>(SumElements());
  o.cardinality = all->size();
  o.enumerate_prefix = [all](std::size_t count) {
    return std::vector<Token>(all->begin(), all->begin() + std::min(count, all->size()));
  };
  return std::make_shared<const LinearOrder>(std::move(o));
}

std::uint64_t TreeFamily::Code(const Token& element) const {
  NatSeq s = SumSequence(element);
  return CantorPair(index_of(element.arg(0)), SequenceCode(s));
}

std::optional<Token> TreeFamily::Decode(std::uint64_t code) const {
  auto [index, seq_code] = CantorUnpair(code);
  if (index >= elements_.size()) return std::nullopt;
  NatSeq s = SequenceDecode(seq_code);
  if (!contains(index, s)) return std::nullopt;
  return SumElement(elements_[index], s);
}

std::vector<std::uint64_t> CodedPositions(const TreeFamily& family, const Token& element) {
  const std::size_t x = family.index_of(element.arg(0));
  const std::size_t len = SumSequence(element).size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 0; j < len; ++j) {
    std::optional<Token> d = family.Decode(j);
    if (d && family.index_of(d->arg(0)) < x) out.push_back(j);
  }
  return out;
}

namespace {

// Entries (pair e s) with e = bot or a natural number.
Ordering EntryCompare(const Token& a, const Token& b) {
  const Token& ea = a.arg(0);
  const Token& eb = b.arg(0);
  const bool ba = ea.is_sym("bot"), bb = eb.is_sym("bot");
  if (ba != bb) return ba ? Ordering::less : Ordering::greater;
  if (!ba) {
    if (auto c = ea.as_int() <=> eb.as_int(); c != 0) return c;
  }
  return a.arg(1).as_int() <=> b.arg(1).as_int();
}

Ordering HCompare(const Token& s, const Token& t) {
  auto se = s.args(), te = t.args();
  const std::size_t common = std::min(se.size(), te.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = EntryCompare(se[i], te[i]); c != 0) return c;
  }
  return te.size() <=> se.size();
}

Token Entry(std::optional<std::size_t> e, std::uint64_t s) {
  return Pair(e ? Nat(*e) : Bot(), Nat(s));
}

struct TreeShape {
  std::shared_ptr<const TreeFamily> family;
  std::size_t x = 0;
  // coded[j]: the element with code j when it lies below x.
  std::vector<std::optional<Token>> coded;

  bool IsCoded(std::size_t j) const { return j < coded.size() && coded[j].has_value(); }

  bool Member(std::size_t n, const Token& tok) const {
    if (!tok.is_tagged("seq")) return false;
    auto entries = tok.args();
    NatSeq s;
    std::vector<std::optional<std::size_t>> e;
    for (const Token& p : entries) {
      if (!p.is_tagged("pair", 2) || !p.arg(1).is_int() || p.arg(1).as_int() < 0) return false;
      const Token& head = p.arg(0);
      if (head.is_sym("bot")) {
        e.push_back(std::nullopt);
      } else if (head.is_int() && head.as_int() >= 0 && static_cast<std::size_t>(head.as_int()) < n) {
        e.push_back(static_cast<std::size_t>(head.as_int()));
      } else {
        return false;
      }
      s.push_back(static_cast<std::uint64_t>(p.arg(1).as_int()));
    }
    if (!family->contains(x, s)) return false;
    return Consistent(e);
  }

  bool Consistent(std::span<const std::optional<std::size_t>> e) const {
    for (std::size_t j1 = 0; j1 < e.size(); ++j1) {
      if (!IsCoded(j1)) continue;
      if (!e[j1]) return false;
      for (std::size_t j2 = 0; j2 < j1; ++j2) {
        if (!IsCoded(j2)) continue;
        Ordering c = family->SumCompare(*coded[j2], *coded[j1]);
        if ((c < 0) != (*e[j2] < *e[j1])) return false;
      }
    }
    return true;
  }

  std::vector<Token> Enumerate(std::size_t n, std::size_t bound) const {
    std::vector<Token> out;
    for (const NatSeq& s : family->tree(x)) {
      if (s.size() > bound) continue;
      std::vector<std::optional<std::size_t>> e(s.size());
      Assign(n, s, 0, e, out);
    }
    SafeSort(out, HCompare);
    return out;
  }

  void Assign(std::size_t n, const NatSeq& s, std::size_t j, std::vector<std::optional<std::size_t>>& e,
              std::vector<Token>& out) const {
    if (j == s.size()) {
      if (!Consistent(e)) return;
      std::vector<Token> entries;
      for (std::size_t i = 0; i < s.size(); ++i) entries.push_back(Entry(e[i], s[i]));
      out.push_back(Seq(std::move(entries)));
      return;
    }
    if (!IsCoded(j)) {
      e[j] = std::nullopt;
      Assign(n, s, j + 1, e, out);
    }
    for (std::size_t v = 0; v < n; ++v) {
      e[j] = v;
      Assign(n, s, j + 1, e, out);
    }
  }
};

Token MapEntries(const Token& tok, const std::function<Token(const Token&)>& f) {
  std::vector<Token> entries;
  for (const Token& p : tok.args()) {
    entries.push_back(p.arg(0).is_sym("bot") ? p : Pair(f(p.arg(0)), p.arg(1)));
  }
  return Seq(std::move(entries));
}

}  // namespace

Dilator TreeDilator(std::shared_ptr<const TreeFamily> family, const Token& x) {
  auto shape = std::make_shared<TreeShape>();
  shape->family = family;
  shape->x = family->index_of(x);
  std::size_t depth = 0;
  for (const NatSeq& s : family->tree(shape->x)) depth = std::max(depth, s.size());
  for (std::uint64_t j = 0; j < depth; ++j) {
    std::optional<Token> d = family->Decode(j);
    if (d && family->index_of(d->arg(0)) >= shape->x) d.reset();
    shape->coded.push_back(std::move(d));
  }

  PraeDilator d;
  d.name = "H[" + x.str() + "]";
  d.member = [shape](std::size_t n, const Token& tok) { return shape->Member(n, tok); };
  d.compare = [](std::size_t, const Token& a, const Token& b) { return HCompare(a, b); };
  d.map = [](const FinEmbedding& f, const Token& tok) {
    return MapEntries(tok, [&f](const Token& e) { return Nat(f(static_cast<std::size_t>(e.as_int()))); });
  };
  d.supp = [](std::size_t, const Token& tok) {
    IndexSet out;
    for (const Token& p : tok.args()) {
      if (!p.arg(0).is_sym("bot")) out.push_back(static_cast<std::size_t>(p.arg(0).as_int()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  d.pullback = [](const FinEmbedding& f, const Token& tok) {
    return MapEntries(tok, [&f](const Token& e) {
      auto p = f.Preimage(static_cast<std::size_t>(e.as_int()));
      if (!p) throw DomainError(e.str() + " is outside the range of the embedding");
      return Nat(*p);
    });
  };
  d.size = [](const Token& tok) { return tok.args().size(); };
  d.enumerate = [shape](std::size_t n, std::size_t bound) { return shape->Enumerate(n, bound); };
  return std::make_shared<const PraeDilator>(std::move(d));
}

Token TreeAlternative(const ExtTerm& term) {
  std::vector<Token> entries;
  for (const Token& p : SeqEntries(term.token)) {
    const Token& e = p.arg(0);
    if (e.is_sym("bot")) {
      entries.push_back(p);
      continue;
    }
    const std::uint64_t i = AsNat(e);
    if (i >= term.support.size()) throw DomainError("entry " + e.str() + " outside the parameters");
    entries.push_back(Pair(term.support[i], p.arg(1)));
  }
  return Seq(std::move(entries));
}

Ordering TreeAlternativeCompare(const LinearOrder& z, const ExtTerm& a, const ExtTerm& b) {
  Token sa = TreeAlternative(a), sb = TreeAlternative(b);
  auto se = sa.args(), te = sb.args();
  const std::size_t common = std::min(se.size(), te.size());
  for (std::size_t i = 0; i < common; ++i) {
    const Token& ea = se[i].arg(0);
    const Token& eb = te[i].arg(0);
    const bool ba = ea.is_sym("bot"), bb = eb.is_sym("bot");
    if (ba != bb) return ba ? Ordering::less : Ordering::greater;
    if (!ba) {
      if (auto c = z.compare(ea, eb); c != 0) return c;
    }
    if (auto c = se[i].arg(1).as_int() <=> te[i].arg(1).as_int(); c != 0) return c;
  }
  return te.size() <=> se.size();
}

Token FiniteApproximation(const TreeFamily& family, const Token& element) {
  const std::size_t x = family.index_of(element.arg(0));
  NatSeq s = SumSequence(element);
  if (!family.contains(x, s)) throw DomainError(element.str() + " is not in the family");
  std::vector<std::uint64_t> positions = CodedPositions(family, element);
  std::vector<Token> decoded;
  for (std::uint64_t j : positions) decoded.push_back(*family.Decode(j));
  std::vector<Token> entries;
  std::size_t next = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (next < positions.size() && positions[next] == j) {
      std::size_t rank = 0;
      for (const Token& other : decoded) {
        if (family.SumCompare(other, decoded[next]) < 0) ++rank;
      }
      entries.push_back(Entry(rank, s[j]));
      ++next;
    } else {
      entries.push_back(Entry(std::nullopt, s[j]));
    }
  }
  return Seq(std::move(entries));
}

const PraeDilator& FamilyDilators::H(const Token& x) const {
  auto it = h.find(x);
  if (it == h.end()) throw DomainError(x.str() + " is not an element of X or bot");
  return *it->second;
}

namespace {

Token Triple(std::size_t n, const Token& x, const Token& tau) {
  return Token::Tagged("triple", {Nat(n), x, tau});
}

bool IsTriple(const Token& t) {
  return t.is_tagged("triple", 3) && t.arg(0).is_int() && t.arg(0).as_int() >= 0;
}

}  // namespace

FamilyDilators MakeFamilyDilators(std::shared_ptr<const TreeFamily> family) {
  auto h = std::make_shared<std::map<Token, Dilator>>();
  h->emplace(Bot(), StarDilator());
  for (const Token& x : family->elements()) h->emplace(x, TreeDilator(family, x));
  OrderRef xs = AdjoinBottom(family->order());

  auto tree = [h](const Token& x) -> const PraeDilator& { return *h->at(x); };

  PraeDilator d;
  d.name = "F";
  d.member = [h, xs](std::size_t n, const Token& tok) {
    if (!IsTriple(tok) || !xs->valid(tok.arg(1))) return false;
    const std::size_t big_n = static_cast<std::size_t>(tok.arg(0).as_int());
    return big_n < n && h->at(tok.arg(1))->member(big_n, tok.arg(2));
  };
  d.compare = [tree, xs](std::size_t, const Token& a, const Token& b) {
    if (auto c = a.arg(0).as_int() <=> b.arg(0).as_int(); c != 0) return c;
    if (auto c = xs->compare(a.arg(1), b.arg(1)); c != 0) return c;
    return tree(a.arg(1)).compare(static_cast<std::size_t>(a.arg(0).as_int()), a.arg(2), b.arg(2));
  };
  d.map = [tree](const FinEmbedding& f, const Token& tok) {
    const std::size_t big_n = static_cast<std::size_t>(tok.arg(0).as_int());
    return Triple(f(big_n), tok.arg(1), tree(tok.arg(1)).map(f.RestrictBelow(big_n), tok.arg(2)));
  };
  d.supp = [tree](std::size_t, const Token& tok) {
    const std::size_t big_n = static_cast<std::size_t>(tok.arg(0).as_int());
    IndexSet out = tree(tok.arg(1)).supp(big_n, tok.arg(2));
    out.push_back(big_n);
    return out;
  };
  d.pullback = [tree](const FinEmbedding& f, const Token& tok) {
    auto big_n = f.Preimage(static_cast<std::size_t>(tok.arg(0).as_int()));
    if (!big_n) throw DomainError(tok.str() + " is outside the range of the embedding");
    return Triple(*big_n, tok.arg(1), tree(tok.arg(1)).pullback(f.RestrictBelow(*big_n), tok.arg(2)));
  };
  d.size = [tree](const Token& tok) { return 1 + tree(tok.arg(1)).size(tok.arg(2)); };
  d.enumerate = [h, family](std::size_t n, std::size_t bound) {
    std::vector<Token> out;
    if (bound == 0) return out;
    for (std::size_t big_n = 0; big_n < n; ++big_n) {
      out.push_back(Triple(big_n, Bot(), Token::Sym("star")));
      for (const Token& x : family->elements()) {
        for (const Token& tau : h->at(x)->Members(big_n, bound - 1)) {
          out.push_back(Triple(big_n, x, tau));
        }
      }
    }
    return out;
  };
  d.mu = [](std::size_t, std::size_t m) { return Triple(m, Bot(), Token::Sym("star")); };
  return FamilyDilators{family, std::make_shared<const PraeDilator>(std::move(d)), *h};
}

Dilator FamilyDilator(std::shared_ptr<const TreeFamily> family) {
  return MakeFamilyDilators(std::move(family)).f;
}

bool FzMember(const FamilyDilators& bundle, const LinearOrder& z, const Token& fz) {
  if (!fz.is_tagged("fz", 3) || !z.valid(fz.arg(0))) return false;
  const Token& x = fz.arg(1);
  if (!bundle.h.contains(x)) return false;
  if (!ExtMember(bundle.H(x), z, fz.arg(2))) return false;
  ExtTerm term = ExtTerm::FromToken(fz.arg(2));
  return FinBelow(term.support, fz.arg(0), z);
}

ExtTerm ChiF(const FamilyDilators& bundle, const LinearOrder& z, const Token& fz) {
  if (!FzMember(bundle, z, fz)) throw DomainError("invalid element of F_Z: " + fz.str());
  ExtTerm term = ExtTerm::FromToken(fz.arg(2));
  std::vector<Token> support = term.support;
  support.push_back(fz.arg(0));
  return ExtTerm{std::move(support), Triple(term.support.size(), fz.arg(1), term.token)};
}

Token ChiFInverse(const FamilyDilators& bundle, const LinearOrder& z, const ExtTerm& term) {
  if (!ExtMember(*bundle.f, z, term)) {
    throw DomainError("invalid extension term " + term.ToToken().str());
  }
  std::vector<Token> a(term.support.begin(), term.support.end() - 1);
  return Token::Tagged("fz", {term.support.back(), term.token.arg(1), ExtToken(a, term.token.arg(2))});
}

Ordering FzCompare(const FamilyDilators& bundle, const LinearOrder& z, const Token& a,
                   const Token& b) {
  if (auto c = z.compare(a.arg(0), b.arg(0)); c != 0) return c;
  OrderRef xs = AdjoinBottom(bundle.family->order());
  if (auto c = xs->compare(a.arg(1), b.arg(1)); c != 0) return c;
  return ExtCompareUnchecked(bundle.H(a.arg(1)), z, ExtTerm::FromToken(a.arg(2)),
                             ExtTerm::FromToken(b.arg(2)));
}

TreeEmbedding::TreeEmbedding(FamilyDilators bundle, CertifiedUpperDerivative target)
    : bundle_(std::move(bundle)), target_(std::move(target)) {
  if (target_.base() != bundle_.f) {
    throw ContractError("upper derivative " + target_.get().xi.name + " is not over F");
  }
}

ExtTerm TreeEmbedding::MuOf(const Token& x) const {
  return MuExt(*target_.target(), *bundle_.family->order(), x);
}

Ordering TreeEmbedding::Compare(const ExtTerm& a, const ExtTerm& b) const {
  return ExtCompareUnchecked(*target_.target(), *bundle_.family->order(), a, b);
}

ExtTerm TreeEmbedding::operator()(const Token& element) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(element); it != memo_.end()) return it->second;
  }
  ExtTerm value = Compute(element);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(element, value);
  return value;
}

ExtTerm TreeEmbedding::Compute(const Token& element) const {
  const TreeFamily& family = *bundle_.family;
  const UpperDerivative& g = target_.get();
  const LinearOrder& x_order = *family.order();
  const Token& x = element.arg(0);

  // The approximation e: coded positions below len(s) -> D^G_X.
  std::vector<Token> range;
  for (std::uint64_t j : CodedPositions(family, element)) {
    range.push_back((*this)(*family.Decode(j)).ToToken());
  }
  OrderRef g_order = ExtOrder(g.target, family.order());
  SafeSort(range, [&g_order](const Token& a, const Token& b) { return g_order->compare(a, b); });
  Token j0 = ExtToken(range, FiniteApproximation(family, element));

  Token fz = Token::Tagged("fz", {MuOf(x).ToToken(), x, j0});
  ExtTerm chi = ChiF(bundle_, *g_order, fz);
  ExtTerm zeta = Zeta(*g.base, *g.target, x_order, chi);
  return ExtMorphismUnchecked(g.xi, zeta);
}

CertifiedUpperDerivative DefaultFamilyTarget(const FamilyDilators& bundle, std::size_t max_n,
                                             std::size_t bound) {
  return CertifyUpperDerivative(DerivativeUpperDerivative(bundle.f), max_n, bound);
}

SuiteReport CheckTreeEmbedding(const TreeEmbedding& j) {
  const TreeFamily& family = *j.bundle().family;
  const PraeDilator& g = *j.target().target;
  SuiteReport report("tree-embedding");
  report.parameters["target"] = g.name;
  report.parameters["elements"] = static_cast<std::int64_t>(family.SumElements().size());
  std::vector<Token> elements = family.SumElements();
  std::vector<ExtTerm> values;
  for (const Token& e : elements) {
    ++report.checks;
    try {
      values.push_back(j(e));
    } catch (const std::exception& ex) {
      report.Fail("defined", 0, Witness({e}), ex.what());
      report.Canonicalize();
      return report;
    }
    if (!ExtMember(g, *family.order(), values.back())) {
      report.Fail("value-member", 0, Witness({e, values.back().ToToken()}));
    }
  }
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      ++report.checks;
      if (j.Compare(values[a], values[b]) >= 0) {
        report.Fail("order-preserving", 0, Witness({elements[a], elements[b]}));
      }
    }
  }
  for (const Token& x : family.elements()) {
    ExtTerm mu = j.MuOf(x);
    for (std::size_t a = 0; a < elements.size(); ++a) {
      if (family.index_of(elements[a].arg(0)) >= family.index_of(x)) continue;
      ++report.checks;
      if (j.Compare(values[a], mu) >= 0) {
        report.Fail("below-mu", 0, Witness({elements[a], x}));
      }
    }
  }
  report.Canonicalize();
  return report;
}

SuiteReport CheckFamilyWellFounded(const TreeFamily& family) {
  SuiteReport report("family-well-founded");
  std::vector<Token> elements = family.SumElements();
  report.parameters["elements"] = static_cast<std::int64_t>(elements.size());
  ++report.checks;
  auto sorted = TopologicalSort(elements, [&family](const Token& a, const Token& b) {
    return family.SumCompare(a, b) < 0;
  });
  if (!sorted) report.Fail("sum-well-founded", 0, {}, "descending cycle in the dependent sum");
  report.Canonicalize();
  return report;
}

}  // namespace dilator
