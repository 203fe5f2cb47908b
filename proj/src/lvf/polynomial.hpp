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

#ifndef LVF_POLYNOMIAL_HPP
#define LVF_POLYNOMIAL_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lvf/rational.hpp"

namespace lvf {

enum class Var : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Var, 3> kAllVars = {Var::x, Var::y, Var::z};

std::string_view var_name(Var v);

using Exponents = std::array<unsigned, 3>;

struct Term {
  Exponents exp{};
  Rational coeff;
};

/// True when `a` precedes `b` in descending graded-lexicographic order
/// (total degree first, then x, y, z exponents).
bool grlex_greater(const Exponents& a, const Exponents& b);

/// Sparse polynomial in x, y, z over the rationals. Terms are kept sorted in
/// descending grlex order with no zero coefficients, so equality is
/// structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);

  static Polynomial variable(Var v);
  static Polynomial monomial(const Exponents& e, const Rational& c);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term (0 when absent).
  [[nodiscard]] Rational constant_term() const;
  /// Leading term under grlex; requires a nonzero polynomial.
  [[nodiscard]] const Term& leading() const;

  [[nodiscard]] unsigned degree(Var v) const;
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] bool depends_on(Var v) const { return degree(v) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  [[nodiscard]] Polynomial derivative(Var v) const;
  /// Replaces v by the constant `value`.
  [[nodiscard]] Polynomial substitute(Var v, const Rational& value) const;
  [[nodiscard]] Rational evaluate(const std::array<Rational, 3>& point) const;
  [[nodiscard]] double evaluate(const std::array<double, 3>& point) const;

  /// Coefficients with respect to `v`: result[i] multiplies v^i.
  [[nodiscard]] std::vector<Polynomial> coefficients_in(Var v) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Var v);

  /// Canonical text in the expression grammar, e.g. "3*x^2*y - 1/2*z + 4".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned n);

/// Exact quotient a/b when b divides a, nullopt otherwise. b must be nonzero.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor, normalized to integer coefficients with content 1
/// and positive leading coefficient. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Returns c with c * p having integer coefficients of content 1 and a
/// positive leading coefficient. p must be nonzero.
Rational primitive_scale(const Polynomial& p);

inline std::string to_string(const Polynomial& p) { return p.to_string(); }

}  // namespace lvf

#endif  // LVF_POLYNOMIAL_HPP
