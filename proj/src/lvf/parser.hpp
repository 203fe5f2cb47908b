// Copyright 2026 The lvf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LVF_PARSER_HPP
#define LVF_PARSER_HPP

#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lvf/rational_function.hpp"

namespace lvf {

/// Syntax error or division by zero while reading an expression. `position`
/// is the 0-based character offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// How leaves of an expression are interpreted. The value type T needs
/// + - * / and unary minus; division by zero must throw MathError.
template <class T>
struct ExpressionAlgebra {
  std::function<T(const Integer&)> constant;
  /// nullopt for an unknown identifier.
  std::function<std::optional<T>(std::string_view)> identifier;
};

namespace detail {

enum class TokenKind { kNumber, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text);

/// Binding powers: additive 10, multiplicative 20, prefix minus 25, power 30.
int infix_precedence(TokenKind k);

template <class T>
class PrattParser {
 public:
  PrattParser(std::vector<Token> tokens, const ExpressionAlgebra<T>& alg)
      : tokens_(std::move(tokens)), alg_(alg) {}

  T parse_all() {
    T v = parse(0);
    if (peek().kind != TokenKind::kEnd) fail("unexpected '" + peek().text + "'", peek());
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  [[noreturn]] static void fail(const std::string& msg, const Token& t) { throw ParseError(msg, t.pos); }

  T parse(int min_prec) {
    T left = parse_prefix();
    while (true) {
      const Token& op = peek();
      const int prec = infix_precedence(op.kind);
      if (prec <= min_prec) break;
      advance();
      if (op.kind == TokenKind::kCaret) {
        left = power(left, parse_exponent());
        continue;
      }
      T right = parse(prec);
      try {
        switch (op.kind) {
          case TokenKind::kPlus: left = left + right; break;
          case TokenKind::kMinus: left = left - right; break;
          case TokenKind::kStar: left = left * right; break;
          case TokenKind::kSlash: left = left / right; break;
          default: fail("unexpected operator", op);
        }
      } catch (const MathError&) {
        fail("division by zero", op);
      }
    }
    return left;
  }

  T parse_prefix() {
    const Token& t = advance();
    switch (t.kind) {
      case TokenKind::kNumber:
        return alg_.constant(Integer(t.text, 10));
      case TokenKind::kIdent: {
        auto v = alg_.identifier(t.text);
        if (!v) fail("unknown identifier '" + t.text + "'", t);
        return *v;
      }
      case TokenKind::kMinus:
        return -parse(25);
      case TokenKind::kPlus:
        return parse(25);
      case TokenKind::kLParen: {
        T inner = parse(0);
        if (peek().kind != TokenKind::kRParen) fail("expected ')'", peek());
        advance();
        return inner;
      }
      case TokenKind::kEnd:
        fail("unexpected end of input", t);
      default:
        fail("unexpected '" + t.text + "'", t);
    }
  }

  // Exponents are non-negative integer literals, optionally parenthesized,
  // and associate to the right.
  unsigned long parse_exponent() {
    const Token& t = advance();
    unsigned long base = 0;
    if (t.kind == TokenKind::kNumber) {
      base = std::stoul(t.text);
    } else if (t.kind == TokenKind::kLParen) {
      base = parse_exponent();
      if (peek().kind != TokenKind::kRParen) fail("expected ')'", peek());
      advance();
    } else if (t.kind == TokenKind::kMinus) {
      fail("only non-negative integer exponents are allowed", t);
    } else {
      fail("exponent must be an integer literal", t);
    }
    if (peek().kind == TokenKind::kCaret) {
      advance();
      const unsigned long e = parse_exponent();
      unsigned long r = 1;
      for (unsigned long i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  T power(const T& base, unsigned long e) {
    T result = alg_.constant(Integer(1));
    T b = base;
    while (e != 0) {
      if (e & 1UL) result = result * b;
      e >>= 1UL;
      if (e != 0) b = b * b;
    }
    return result;
  }

  std::vector<Token> tokens_;
  const ExpressionAlgebra<T>& alg_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class T>
T parse_with(std::string_view text, const ExpressionAlgebra<T>& alg) {
  detail::PrattParser<T> parser(detail::tokenize(text), alg);
  return parser.parse_all();
}

/// Parses an expression over the given subset of {x, y, z}.
RationalFunction parse_expression(std::string_view text,
                                  const std::vector<Var>& variables = {Var::x, Var::y, Var::z});

}  // namespace lvf

#endif  // LVF_PARSER_HPP
