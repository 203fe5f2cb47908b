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

#include "lvf/rational.hpp"

#include <cctype>

namespace lvf {

namespace {

bool valid_integer_text(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer integer_from(std::string s) {
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  Integer d = integer_from(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(integer_from(num), d);
  r.canonicalize();
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) ||
      !mpz_perfect_square_p(r.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer n = sqrt(Integer(r.get_num()));
  Integer d = sqrt(Integer(r.get_den()));
  return Rational(n, d);
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw MathError("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

}  // namespace lvf
