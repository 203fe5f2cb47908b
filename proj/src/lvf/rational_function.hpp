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

#ifndef LVF_RATIONAL_FUNCTION_HPP
#define LVF_RATIONAL_FUNCTION_HPP

#include <array>
#include <string>

#include "lvf/polynomial.hpp"

namespace lvf {

/// Element of Q(x, y, z) in canonical form.
///
/// Canonical form: gcd(num, den) = 1, both have integer coefficients whose
/// joint content is 1, and den has a positive grlex leading coefficient.
/// Two equal functions therefore have identical representations.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c)  // NOLINT: implicit field embedding
      : num_(Rational(c.get_num())), den_(Rational(c.get_den())) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  explicit RationalFunction(Polynomial p) : RationalFunction(std::move(p), Polynomial(1)) {}
  /// Throws MathError when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(Var v) { return RationalFunction(Polynomial::variable(v)); }

  [[nodiscard]] const Polynomial& num() const { return num_; }
  [[nodiscard]] const Polynomial& den() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] Rational constant_value() const;
  [[nodiscard]] bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }
  /// True when neither y nor z occurs.
  [[nodiscard]] bool is_univariate_x() const { return !depends_on(Var::y) && !depends_on(Var::z); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws MathError on division by zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  [[nodiscard]] RationalFunction derivative(Var v) const;
  [[nodiscard]] RationalFunction substitute(Var v, const Rational& value) const;
  /// Throws MathError at a pole.
  [[nodiscard]] Rational evaluate(const std::array<Rational, 3>& point) const;
  [[nodiscard]] double evaluate(const std::array<double, 3>& point) const;

  /// "num" or "(num)/(den)"; parses back to the same value.
  [[nodiscard]] std::string to_string() const;

 private:
  struct Canonical {};
  RationalFunction(Polynomial num, Polynomial den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
  void scale_to_integers();

  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& f, long n);

// Coefficient-field contract used by the form algebra.
inline RationalFunction partial(const RationalFunction& f, Var v) { return f.derivative(v); }
inline RationalFunction zero_like(const RationalFunction&) { return {}; }
inline RationalFunction one_like(const RationalFunction&) { return {1}; }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline std::string to_string(const RationalFunction& f) { return f.to_string(); }

}  // namespace lvf

#endif  // LVF_RATIONAL_FUNCTION_HPP
