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

#include "lvf/rational_function.hpp"

namespace lvf {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("division by the zero polynomial");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *exact_divide(num_, g);
      den_ = *exact_divide(den_, g);
    }
  }
  scale_to_integers();
}

void RationalFunction::scale_to_integers() {
  // Scale den to a primitive integer polynomial, then clear the numerator's
  // denominators and remove the joint integer content.
  const Rational s = primitive_scale(den_);
  den_ *= s;
  num_ *= s;
  Integer den_lcm = 1;
  for (const auto& t : num_.terms()) den_lcm = ilcm(den_lcm, t.coeff.get_den());
  if (den_lcm != 1) {
    num_ *= Rational(den_lcm);
    den_ *= Rational(den_lcm);
    Integer content = 0;
    for (const auto& t : num_.terms()) content = igcd(content, t.coeff.get_num());
    for (const auto& t : den_.terms()) content = igcd(content, t.coeff.get_num());
    if (content != 1) {
      const Rational inv(1, content);
      num_ *= inv;
      den_ *= inv;
    }
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw MathError("rational function is not constant");
  return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Canonical{});
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  // Henrici: with g = gcd(da, db) any common factor of the new numerator and
  // denominator already divides g.
  const Polynomial g = gcd(a.den_, b.den_);
  if (g.is_constant()) {
    RationalFunction r(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RationalFunction::Canonical{});
    if (r.num_.is_zero()) return {};
    r.scale_to_integers();
    return r;
  }
  const Polynomial da = *exact_divide(a.den_, g);
  const Polynomial db = *exact_divide(b.den_, g);
  Polynomial t = a.num_ * db + b.num_ * da;
  if (t.is_zero()) return {};
  Polynomial den = da * b.den_;
  const Polynomial g2 = gcd(t, g);
  if (!g2.is_constant()) {
    t = *exact_divide(t, g2);
    den = *exact_divide(den, g2);
  }
  RationalFunction r(std::move(t), std::move(den), RationalFunction::Canonical{});
  r.scale_to_integers();
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_constant() && b.den_.is_constant() && a.num_.is_constant()) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  // Operands are canonical, so cross-cancelling leaves a coprime pair.
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  RationalFunction r(*exact_divide(a.num_, g1) * *exact_divide(b.num_, g2),
                     *exact_divide(b.den_, g1) * *exact_divide(a.den_, g2), RationalFunction::Canonical{});
  r.scale_to_integers();
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw MathError("division by zero rational function");
  return a * RationalFunction(b.den_, b.num_);
}

RationalFunction RationalFunction::derivative(Var v) const {
  if (!depends_on(v)) return {};
  if (den_.is_constant()) return RationalFunction(num_.derivative(v), den_);
  return RationalFunction(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RationalFunction RationalFunction::substitute(Var v, const Rational& value) const {
  Polynomial d = den_.substitute(v, value);
  if (d.is_zero()) throw MathError("substitution hits a pole");
  return RationalFunction(num_.substitute(v, value), std::move(d));
}

Rational RationalFunction::evaluate(const std::array<Rational, 3>& point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw MathError("evaluation at a pole");
  return num_.evaluate(point) / d;
}

double RationalFunction::evaluate(const std::array<double, 3>& point) const {
  return num_.evaluate(point) / den_.evaluate(point);
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction pow(const RationalFunction& f, long n) {
  if (n < 0) return pow(RationalFunction(1) / f, -n);
  return RationalFunction(pow(f.num(), static_cast<unsigned>(n)),
                          pow(f.den(), static_cast<unsigned>(n)));
}

}  // namespace lvf
