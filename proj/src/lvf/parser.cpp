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

#include "lvf/parser.hpp"

#include <algorithm>

namespace lvf {

namespace detail {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::kNumber, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({TokenKind::kIdent, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    TokenKind k{};
    switch (c) {
      case '+': k = TokenKind::kPlus; break;
      case '-': k = TokenKind::kMinus; break;
      case '*': k = TokenKind::kStar; break;
      case '/': k = TokenKind::kSlash; break;
      case '^': k = TokenKind::kCaret; break;
      case '(': k = TokenKind::kLParen; break;
      case ')': k = TokenKind::kRParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({TokenKind::kEnd, "end of input", text.size()});
  return out;
}

int infix_precedence(TokenKind k) {
  switch (k) {
    case TokenKind::kPlus:
    case TokenKind::kMinus: return 10;
    case TokenKind::kStar:
    case TokenKind::kSlash: return 20;
    case TokenKind::kCaret: return 30;
    default: return -1;
  }
}

}  // namespace detail

RationalFunction parse_expression(std::string_view text, const std::vector<Var>& variables) {
  ExpressionAlgebra<RationalFunction> alg{
      [](const Integer& n) { return RationalFunction(Rational(n)); },
      [&variables](std::string_view name) -> std::optional<RationalFunction> {
        for (Var v : variables) {
          if (var_name(v) == name) return RationalFunction::variable(v);
        }
        return std::nullopt;
      }};
  return parse_with(text, alg);
}

}  // namespace lvf
