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

#ifndef LVF_RATIONAL_HPP
#define LVF_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace lvf {

/// Arbitrary precision integer.
using Integer = mpz_class;

/// Exact rational number. GMP keeps numerator and denominator coprime with a
/// positive denominator after every operation.
using Rational = mpq_class;

/// Raised for any algebraic domain violation (division by zero, evaluation at
/// a pole, mismatched contexts).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// Exact square root of a non-negative rational, if it is a rational square.
std::optional<Rational> rational_sqrt(const Rational& r);

inline Integer igcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer ilcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, long exponent);

}  // namespace lvf

#endif  // LVF_RATIONAL_HPP
