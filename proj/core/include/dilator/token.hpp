// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Immutable s-expression tokens. Every element of every order in this
// library is a Token; orders own the meaning of their tokens.
//
// Grammar:
//   token := integer | symbol | '(' token* ')'
//   integer := '-'? [0-9]+
//   symbol := [A-Za-z_][A-Za-z0-9_.:+*-]*
//
// Conventional shapes:
//   (seq e0 e1 ...)        finite sequence
//   (pair x y)             element of a product or dependent sum
//   bot, top               adjoined bottom / top
//   (set e0 e1 ...)        finite set, ascending under the owning order
//   (ext (set ...) tok)    element of an extension D^T_X
//   (mu m), (xi (set ...) tok)   derivative terms
//
// The printed form is canonical: single spaces, no trailing blanks, so
// print(parse(print(t))) == print(t) for every token t.

#ifndef DILATOR_TOKEN_HPP_
#define DILATOR_TOKEN_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dilator {

class Token {
 public:
  enum class Kind : std::uint8_t { kInt, kSym, kList };

  // The empty list.
  Token();

  static Token Int(std::int64_t value);
  static Token Sym(std::string_view name);
  static Token List(std::vector<Token> items);
  // (head args...)
  static Token Tagged(std::string_view head, std::vector<Token> args);
  static Token Tagged(std::string_view head, std::initializer_list<Token> args);

  // Throws ParseError on malformed input or trailing garbage.
  static Token Parse(std::string_view text);

  Kind kind() const;
  bool is_int() const { return kind() == Kind::kInt; }
  bool is_sym() const { return kind() == Kind::kSym; }
  bool is_list() const { return kind() == Kind::kList; }
  bool is_sym(std::string_view name) const;
  // A list whose first item is the symbol `head`.
  bool is_tagged(std::string_view head) const;
  bool is_tagged(std::string_view head, std::size_t arity) const;

  // Accessors throw DomainError on kind mismatch.
  std::int64_t as_int() const;
  const std::string& as_sym() const;
  std::span<const Token> items() const;
  // Items after the head symbol of a tagged list.
  std::span<const Token> args() const;
  const Token& arg(std::size_t i) const;

  std::size_t hash() const;
  // Number of atoms and lists in the tree.
  std::size_t node_count() const;
  std::string str() const;

  friend bool operator==(const Token& a, const Token& b);
  // Structural order: ints < symbols < lists; ints numerically, symbols
  // lexicographically, lists lexicographically by items. Used for
  // canonical output only; it is unrelated to any order of the library.
  friend std::strong_ordering operator<=>(const Token& a, const Token& b);

 private:
  struct Node;
  explicit Token(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

// Convenience builders for the conventional shapes.
Token Seq(std::vector<Token> entries);
Token SeqOf(std::span<const std::int64_t> entries);
Token SetOf(std::vector<Token> ascending);
Token Pair(Token x, Token y);
Token Bot();
Token Top();

// Entries of (seq ...) / (set ...); DomainError on shape mismatch.
std::span<const Token> SeqEntries(const Token& t);
std::span<const Token> SetEntries(const Token& t);

std::ostream& operator<<(std::ostream& os, const Token& t);

}  // namespace dilator

template <>
struct std::hash<dilator::Token> {
  std::size_t operator()(const dilator::Token& t) const noexcept { return t.hash(); }
};

#endif  // DILATOR_TOKEN_HPP_
