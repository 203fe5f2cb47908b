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

#ifndef LVF_UPOLY_HPP
#define LVF_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "lvf/polynomial.hpp"

namespace lvf {

/// Dense univariate polynomial in x over Q. coeffs()[i] multiplies x^i; the
/// top coefficient is never zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c) : UPoly(std::vector<Rational>{c}) {}  // NOLINT
  UPoly(long c) : UPoly(Rational(c)) {}                           // NOLINT

  static UPoly x() { return UPoly(std::vector<Rational>{0, 1}); }
  /// Throws MathError when p involves y or z.
  static UPoly from_polynomial(const Polynomial& p);
  [[nodiscard]] Polynomial to_polynomial() const;

  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] Rational lc() const { return c_.empty() ? Rational(0) : c_.back(); }
  [[nodiscard]] Rational coeff(int i) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  [[nodiscard]] UPoly derivative() const;
  [[nodiscard]] Rational evaluate(const Rational& at) const;
  [[nodiscard]] UPoly monic() const;
  /// p(x + shift).
  [[nodiscard]] UPoly shifted(const Rational& shift) const;

  [[nodiscard]] std::string to_string() const { return to_polynomial().to_string(); }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& p, unsigned n);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct ExtendedGcd {
  UPoly g;  // monic gcd
  UPoly s;  // s*a + t*b = g
  UPoly t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

/// Inverse of a modulo m; throws MathError when they are not coprime.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

/// Yun's square-free decomposition of a nonzero polynomial: monic factors
/// paired with multiplicities, p = lc * prod f_i^{e_i}.
std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& p);

/// Complete factorization over Q into monic irreducible factors with
/// multiplicities, ordered by (degree, coefficients). The unit is dropped.
std::vector<std::pair<UPoly, unsigned>> factor(const UPoly& p);

}  // namespace lvf

#endif  // LVF_UPOLY_HPP
