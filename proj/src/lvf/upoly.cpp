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

#include "lvf/upoly.hpp"

#include <algorithm>

namespace lvf {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_polynomial(const Polynomial& p) {
  if (p.depends_on(Var::y) || p.depends_on(Var::z)) {
    throw MathError("polynomial is not univariate in x: " + p.to_string());
  }
  std::vector<Rational> c(p.degree(Var::x) + 1);
  for (const auto& t : p.terms()) c[t.exp[0]] = t.coeff;
  return UPoly(std::move(c));
}

Polynomial UPoly::to_polynomial() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) terms.push_back(Term{{static_cast<unsigned>(i), 0, 0}, c_[i]});
  }
  return Polynomial::from_terms(std::move(terms));
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

Rational UPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  const Rational inv = 1 / lc();
  UPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

UPoly UPoly::shifted(const Rational& shift) const {
  // Horner in the ring: ((c_n)(x+s) + c_{n-1})(x+s) + ...
  const UPoly lin(std::vector<Rational>{shift, 1});
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly(*it);
  return acc;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> q(r.size() - db);
  const Rational inv = 1 / b.lc();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational f = r[k + db] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly pow(const UPoly& p, unsigned n) {
  UPoly result(1);
  UPoly b = p;
  while (n != 0) {
    if (n & 1U) result = result * b;
    n >>= 1U;
    if (n != 0) b = b * b;
  }
  return result;
}

UPoly gcd(const UPoly& a, const UPoly& b) { return extended_gcd(a, b).g; }

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0(1), s1;
  UPoly t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {UPoly(), UPoly(), UPoly()};
  const UPoly inv(1 / r0.lc());
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  ExtendedGcd e = extended_gcd(a, m);
  if (e.g.degree() != 0) throw MathError("polynomials are not coprime");
  return divmod(e.s, m).second;
}

std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero()) throw MathError("square-free decomposition of zero");
  std::vector<std::pair<UPoly, unsigned>> out;
  if (p.degree() == 0) return out;
  const UPoly f = p.monic();
  UPoly a = gcd(f, f.derivative());
  UPoly b = divmod(f, a).first;
  UPoly c = divmod(f.derivative(), a).first;
  // Yun: with d = c - b', each step peels off the factor of multiplicity i.
  UPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace lvf
