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

#include "lvf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <utility>

namespace lvf {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::z: return "z";
  }
  return "?";
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  const unsigned da = a[0] + a[1] + a[2];
  const unsigned db = b[0] + b[1] + b[2];
  if (da != db) return da > db;
  return a > b;
}

namespace {

constexpr std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

bool divides(const Exponents& a, const Exponents& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Polynomial normalized(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * primitive_scale(p);
}

Polynomial lead_coeff(const Polynomial& p, Var v) {
  const unsigned d = p.degree(v);
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.exp[idx(v)] == d) {
      Term s = t;
      s.exp[idx(v)] = 0;
      out.push_back(std::move(s));
    }
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial monomial_gcd(const Exponents& e, const Polynomial& p) {
  Exponents g = e;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < 3; ++i) g[i] = std::min(g[i], t.exp[i]);
  }
  return Polynomial::monomial(g, 1);
}

Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, Var v) {
  const Polynomial c = content_in(p, v);
  auto q = exact_divide(p, c);
  return normalized(*q);
}

// Sparse pseudo-remainder of a by b with respect to v.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, Var v) {
  const unsigned db = b.degree(v);
  const Polynomial lb = lead_coeff(b, v);
  while (!a.is_zero() && a.degree(v) >= db) {
    Exponents shift{};
    shift[idx(v)] = a.degree(v) - db;
    const Polynomial la = lead_coeff(a, v) * Polynomial::monomial(shift, 1);
    a = lb * a - la * b;
    // Integer content never matters for the remainder sequence.
    if (!a.is_zero()) a *= primitive_scale(a);
  }
  return a;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back(Term{{0, 0, 0}, c});
}

Polynomial Polynomial::variable(Var v) {
  Exponents e{};
  e[idx(v)] = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back(Term{e, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grlex_greater(a.exp, b.exp);
  });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].exp == Exponents{0, 0, 0});
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().exp == Exponents{0, 0, 0}) {
    return terms_.back().coeff;
  }
  return 0;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw MathError("leading term of the zero polynomial");
  return terms_.front();
}

unsigned Polynomial::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[idx(v)]);
  return d;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_[0].exp[0] + terms_[0].exp[1] + terms_[0].exp[2];
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && grlex_greater(i->exp, j->exp))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || grlex_greater(j->exp, i->exp)) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.push_back(Term{i->exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.terms_[0].coeff;
  if (a.is_constant()) return b * a.terms_[0].coeff;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod.push_back(Term{add_exp(s.exp, t.exp), s.coeff * t.coeff});
    }
  }
  return Polynomial::from_terms(std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::derivative(Var v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.exp[idx(v)];
    if (e == 0) continue;
    Term d = t;
    d.exp[idx(v)] = e - 1;
    d.coeff *= e;
    out.push_back(std::move(d));
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(Var v, const Rational& value) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Term s = t;
    s.coeff *= pow(value, t.exp[idx(v)]);
    s.exp[idx(v)] = 0;
    out.push_back(std::move(s));
  }
  return from_terms(std::move(out));
}

Rational Polynomial::evaluate(const std::array<Rational, 3>& point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (std::size_t i = 0; i < 3; ++i) {
      if (t.exp[i] != 0) m *= pow(point[i], t.exp[i]);
    }
    sum += m;
  }
  return sum;
}

double Polynomial::evaluate(const std::array<double, 3>& point) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double m = t.coeff.get_d();
    for (std::size_t i = 0; i < 3; ++i) {
      if (t.exp[i] != 0) m *= std::pow(point[i], static_cast<double>(t.exp[i]));
    }
    sum += m;
  }
  return sum;
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    Term s = t;
    s.exp[idx(v)] = 0;
    buckets[t.exp[idx(v)]].push_back(std::move(s));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, Var v) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& t : coeffs[i].terms_) {
      Term s = t;
      s.exp[idx(v)] += static_cast<unsigned>(i);
      out.push_back(std::move(s));
    }
  }
  return from_terms(std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit_monomial = t.exp == Exponents{0, 0, 0};
    bool need_star = false;
    if (c != 1 || unit_monomial) {
      os << c.get_str();
      need_star = true;
    }
    for (Var v : kAllVars) {
      const unsigned e = t.exp[idx(v)];
      if (e == 0) continue;
      if (need_star) os << "*";
      os << var_name(v);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial result(1);
  Polynomial b = p;
  while (n != 0) {
    if (n & 1U) result *= b;
    n >>= 1U;
    if (n != 0) b *= b;
  }
  return result;
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw MathError("division by the zero polynomial");
  if (b.is_constant()) return a * (Rational(1) / b.leading().coeff);
  std::vector<Term> quotient;
  Polynomial r = a;
  const Term& lb = b.leading();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    if (!divides(lb.exp, lr.exp)) return std::nullopt;
    Exponents e{lr.exp[0] - lb.exp[0], lr.exp[1] - lb.exp[1], lr.exp[2] - lb.exp[2]};
    Polynomial t = Polynomial::monomial(e, lr.coeff / lb.coeff);
    quotient.push_back(t.terms().front());
    r -= t * b;
  }
  return Polynomial::from_terms(std::move(quotient));
}

Rational primitive_scale(const Polynomial& p) {
  if (p.is_zero()) throw MathError("primitive scale of the zero polynomial");
  Integer den_lcm = 1;
  for (const auto& t : p.terms()) den_lcm = ilcm(den_lcm, t.coeff.get_den());
  Integer num_gcd = 0;
  for (const auto& t : p.terms()) {
    Integer n = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    num_gcd = igcd(num_gcd, n);
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  if (p.leading().coeff < 0) s = -s;
  return s;
}


namespace {

struct HeuGcd {
  Polynomial h;
  Polynomial cff;
  Polynomial cfg;
};

Polynomial prs_gcd(const Polynomial& a, const Polynomial& b);

Integer max_norm(const Polynomial& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) {
    const Integer c = abs(t.coeff.get_num());
    if (c > m) m = c;
  }
  return m;
}

Integer integer_content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) g = igcd(g, t.coeff.get_num());
  return g;
}

bool has_integer_coeffs(const Polynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const Term& t) { return is_integer(t.coeff); });
}

std::optional<Polynomial> integer_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  auto q = exact_divide(a, b);
  if (!q || !has_integer_coeffs(*q)) return std::nullopt;
  return q;
}

// Inverse of evaluation at v = xi: reads each integer coefficient in balanced
// base xi and places digit i on v^i.
Polynomial interpolate(Polynomial h, const Integer& xi, Var v) {
  std::vector<Term> out;
  const Integer half = xi / 2;
  const Rational inv(1, xi);
  for (unsigned i = 0; !h.is_zero(); ++i) {
    std::vector<Term> digit;
    for (const auto& t : h.terms()) {
      Integer r = t.coeff.get_num() % xi;
      if (r < 0) r += xi;
      if (r > half) r -= xi;
      if (r != 0) digit.push_back(Term{t.exp, Rational(r)});
    }
    const Polynomial g = Polynomial::from_terms(digit);
    for (auto t : digit) {
      t.exp[idx(v)] += i;
      out.push_back(std::move(t));
    }
    h -= g;
    h *= inv;
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial primitive_integer(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Integer c = integer_content(p);
  return c == 1 ? p : p * Rational(1, c);
}

// Heuristic gcd of integer polynomials: evaluate the first variable at a
// large integer, recurse, then lift candidates back and confirm by division.
std::optional<HeuGcd> heuristic_gcd(const Polynomial& f0, const Polynomial& g0,
                                    std::span<const Var> vars) {
  const Integer common = igcd(integer_content(f0), integer_content(g0));
  const Rational unscale(1, common);
  const Polynomial f = f0 * unscale;
  const Polynomial g = g0 * unscale;
  if (vars.empty()) {
    const Integer h = igcd(f.constant_term().get_num(), g.constant_term().get_num());
    return HeuGcd{Polynomial(Rational(h * common)), f * Rational(1, h), g * Rational(1, h)};
  }
  const Var v = vars.front();
  const auto rest = vars.subspan(1);
  const Integer fn = max_norm(f);
  const Integer gn = max_norm(g);
  const Integer b = 2 * std::min(fn, gn) + 29;
  const Integer lf = abs(f.leading().coeff.get_num());
  const Integer lg = abs(g.leading().coeff.get_num());
  Integer xi = std::max<Integer>(std::min<Integer>(b, 99 * sqrt(b)),
                                 2 * std::min<Integer>(fn / lf, gn / lg) + 2);
  const Rational scale(common);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Polynomial ff = f.substitute(v, Rational(xi));
    const Polynomial gg = g.substitute(v, Rational(xi));
    if (!ff.is_zero() && !gg.is_zero()) {
      if (auto r = heuristic_gcd(ff, gg, rest)) {
        const Polynomial h = primitive_integer(interpolate(r->h, xi, v));
        if (auto cff = integer_divide(f, h)) {
          if (auto cfg = integer_divide(g, h)) return HeuGcd{h * scale, *cff, *cfg};
        }
        const Polynomial cff = interpolate(r->cff, xi, v);
        if (auto hh = integer_divide(f, cff)) {
          if (auto cfg = integer_divide(g, *hh)) return HeuGcd{*hh * scale, cff, *cfg};
        }
        const Polynomial cfg = interpolate(r->cfg, xi, v);
        if (auto hh = integer_divide(g, cfg)) {
          if (auto cff2 = integer_divide(f, *hh)) return HeuGcd{*hh * scale, *cff2, cfg};
        }
      }
    }
    xi = xi * 73794 * sqrt(Integer(sqrt(xi))) / 27011;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.is_monomial()) return monomial_gcd(a.leading().exp, b);
  if (b.is_monomial()) return monomial_gcd(b.leading().exp, a);
  if (a == b) return normalized(a);

  const Polynomial ia = normalized(a);
  const Polynomial ib = normalized(b);
  std::vector<Var> vars;
  for (Var w : kAllVars) {
    if (ia.depends_on(w) || ib.depends_on(w)) vars.push_back(w);
  }
  if (auto h = heuristic_gcd(ia, ib, vars)) return normalized(h->h);
  return prs_gcd(ia, ib);
}

namespace {

// Primitive remainder sequence in the highest variable present.
Polynomial prs_gcd(const Polynomial& a, const Polynomial& b) {
  Var v = Var::x;
  for (Var w : kAllVars) {
    if (a.depends_on(w) || b.depends_on(w)) v = w;
  }
  if (!a.depends_on(v)) return gcd(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial pa = normalized(*exact_divide(a, ca));
  Polynomial pb = normalized(*exact_divide(b, cb));
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.depends_on(v)) {
      pb = Polynomial(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, v);
  }
  return normalized(c * pb);
}

}  // namespace

}  // namespace lvf
