// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dilator/token.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <utility>

#include "dilator/errors.hpp"

namespace dilator {

struct Token::Node {
  Kind kind = Kind::kList;
  std::int64_t int_value = 0;
  std::string sym;
  std::vector<Token> items;
  std::size_t hash = 0;
  std::size_t nodes = 1;
};

namespace {

std::size_t Mix(std::size_t h, std::size_t v) {
  // boost::hash_combine with a 64-bit constant.
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

bool IsSymStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool IsSymChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == ':' ||
         c == '+' || c == '*' || c == '-';
}

const Token& EmptyList() {
  static const Token kEmpty = Token::List({});
  return kEmpty;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Token ParseAll() {
    Token t = ParseOne(0);
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input");
    return t;
  }

 private:
  static constexpr int kMaxDepth = 4096;

  [[noreturn]] void Fail(std::string_view what) const {
    throw ParseError("token parse error at offset " + std::to_string(pos_) + ": " +
                     std::string(what));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Token ParseOne(int depth) {
    if (depth > kMaxDepth) Fail("nesting too deep");
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      std::vector<Token> items;
      for (;;) {
        SkipSpace();
        if (pos_ >= text_.size()) Fail("unclosed '('");
        if (text_[pos_] == ')') {
          ++pos_;
          return Token::List(std::move(items));
        }
        items.push_back(ParseOne(depth + 1));
      }
    }
    if (c == ')') Fail("unexpected ')'");
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view digits = text_.substr(start, pos_ - start);
      if (pos_ < text_.size() && IsSymChar(text_[pos_])) Fail("malformed integer");
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) Fail("malformed integer");
      return Token::Int(v);
    }
    if (IsSymStart(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && IsSymChar(text_[pos_])) ++pos_;
      return Token::Sym(text_.substr(start, pos_ - start));
    }
    Fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void Print(const Token& t, std::string& out) {
  switch (t.kind()) {
    case Token::Kind::kInt:
      out += std::to_string(t.as_int());
      return;
    case Token::Kind::kSym:
      out += t.as_sym();
      return;
    case Token::Kind::kList: {
      out += '(';
      bool first = true;
      for (const Token& item : t.items()) {
        if (!first) out += ' ';
        first = false;
        Print(item, out);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

Token::Token() : Token(EmptyList()) {}

Token::Token(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Token Token::Int(std::int64_t value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kInt;
  n->int_value = value;
  n->hash = Mix(0x1234, std::hash<std::int64_t>{}(value));
  return Token(std::move(n));
}

Token Token::Sym(std::string_view name) {
  if (name.empty() || !IsSymStart(name.front()) ||
      !std::all_of(name.begin(), name.end(), IsSymChar)) {
    throw DomainError("invalid symbol '" + std::string(name) + "'");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSym;
  n->sym = std::string(name);
  n->hash = Mix(0x5678, std::hash<std::string_view>{}(name));
  return Token(std::move(n));
}

Token Token::List(std::vector<Token> items) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kList;
  std::size_t h = 0x9abc + items.size();
  std::size_t nodes = 1;
  for (const Token& item : items) {
    h = Mix(h, item.hash());
    nodes += item.node_->nodes;
  }
  n->hash = h;
  n->nodes = nodes;
  n->items = std::move(items);
  return Token(std::move(n));
}

Token Token::Tagged(std::string_view head, std::vector<Token> args) {
  std::vector<Token> items;
  items.reserve(args.size() + 1);
  items.push_back(Sym(head));
  for (Token& a : args) items.push_back(std::move(a));
  return List(std::move(items));
}

Token Token::Tagged(std::string_view head, std::initializer_list<Token> args) {
  return Tagged(head, std::vector<Token>(args));
}

Token Token::Parse(std::string_view text) { return Parser(text).ParseAll(); }

Token::Kind Token::kind() const { return node_->kind; }

bool Token::is_sym(std::string_view name) const { return is_sym() && node_->sym == name; }

bool Token::is_tagged(std::string_view head) const {
  return is_list() && !node_->items.empty() && node_->items.front().is_sym(head);
}

bool Token::is_tagged(std::string_view head, std::size_t arity) const {
  return is_tagged(head) && node_->items.size() == arity + 1;
}

std::int64_t Token::as_int() const {
  if (!is_int()) throw DomainError("expected integer token, got " + str());
  return node_->int_value;
}

const std::string& Token::as_sym() const {
  if (!is_sym()) throw DomainError("expected symbol token, got " + str());
  return node_->sym;
}

std::span<const Token> Token::items() const {
  if (!is_list()) throw DomainError("expected list token, got " + str());
  return node_->items;
}

std::span<const Token> Token::args() const {
  if (!is_list() || node_->items.empty() || !node_->items.front().is_sym()) {
    throw DomainError("expected tagged list, got " + str());
  }
  return std::span<const Token>(node_->items).subspan(1);
}

const Token& Token::arg(std::size_t i) const {
  auto a = args();
  if (i >= a.size()) throw DomainError("missing argument " + std::to_string(i) + " in " + str());
  return a[i];
}

std::size_t Token::hash() const { return node_->hash; }

std::size_t Token::node_count() const { return node_->nodes; }

std::string Token::str() const {
  std::string out;
  Print(*this, out);
  return out;
}

bool operator==(const Token& a, const Token& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Token::Kind::kInt:
      return a.node_->int_value == b.node_->int_value;
    case Token::Kind::kSym:
      return a.node_->sym == b.node_->sym;
    case Token::Kind::kList:
      return a.node_->items == b.node_->items;
  }
  return false;
}

std::strong_ordering operator<=>(const Token& a, const Token& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  switch (a.node_->kind) {
    case Token::Kind::kInt:
      return a.node_->int_value <=> b.node_->int_value;
    case Token::Kind::kSym:
      return a.node_->sym.compare(b.node_->sym) <=> 0;
    case Token::Kind::kList:
      return std::lexicographical_compare_three_way(a.node_->items.begin(), a.node_->items.end(),
                                                    b.node_->items.begin(), b.node_->items.end());
  }
  return std::strong_ordering::equal;
}

Token Seq(std::vector<Token> entries) { return Token::Tagged("seq", std::move(entries)); }

Token SeqOf(std::span<const std::int64_t> entries) {
  std::vector<Token> items;
  items.reserve(entries.size());
  for (std::int64_t e : entries) items.push_back(Token::Int(e));
  return Seq(std::move(items));
}

Token SetOf(std::vector<Token> ascending) { return Token::Tagged("set", std::move(ascending)); }

Token Pair(Token x, Token y) { return Token::Tagged("pair", {std::move(x), std::move(y)}); }

Token Bot() {
  static const Token kBot = Token::Sym("bot");
  return kBot;
}

Token Top() {
  static const Token kTop = Token::Sym("top");
  return kTop;
}

std::span<const Token> SeqEntries(const Token& t) {
  if (!t.is_tagged("seq")) throw DomainError("expected (seq ...), got " + t.str());
  return t.args();
}

std::span<const Token> SetEntries(const Token& t) {
  if (!t.is_tagged("set")) throw DomainError("expected (set ...), got " + t.str());
  return t.args();
}

std::ostream& operator<<(std::ostream& os, const Token& t) { return os << t.str(); }

}  // namespace dilator
