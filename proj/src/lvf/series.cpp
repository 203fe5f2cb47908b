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


#include "lvf/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "lvf/upoly.hpp"

namespace lvf {

namespace {

int min_order(const ExactSeries& a, const ExactSeries& b) { return std::min(a.order(), b.order()); }

bool exact_zero(const ExactSeries& a) { return a.is_exact() && a.coeffs().empty(); }

void check_base(const ExactSeries& a, const ExactSeries& b) {
  if (a.base_point() != b.base_point() && !exact_zero(a) && !exact_zero(b)) {
    throw std::invalid_argument("series at different base points");
  }
}

const Rational& common_base(const ExactSeries& a, const ExactSeries& b) {
  return exact_zero(a) ? b.base_point() : a.base_point();
}

std::string shift_text(const Rational& base) {
  if (base == 0) return "x";
  return base > 0 ? "(x - " + to_string(Rational(base)) + ")" : "(x + " + to_string(Rational(-base)) + ")";
}

}  // namespace

ExactSeries::ExactSeries(Rational base, std::vector<Rational> coeffs, int order)
    : base_(std::move(base)), c_(std::move(coeffs)), order_(std::max(order, -1)) {
  if (order_ != kExact && c_.size() > static_cast<std::size_t>(order_ + 1)) c_.resize(order_ + 1);
  trim();
}

void ExactSeries::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational ExactSeries::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("series coefficient beyond the known order");
  return static_cast<std::size_t>(n) < c_.size() ? c_[n] : Rational(0);
}

bool ExactSeries::is_zero() const { return c_.empty(); }

ExactSeries ExactSeries::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return {base_, std::move(c), order_};
}

ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) {
  check_base(a, b);
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return {common_base(a, b), std::move(c), min_order(a, b)};
}

ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) { return a + (-b); }

ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
  check_base(a, b);
  if (exact_zero(a) || exact_zero(b)) return {common_base(a, b), {}, ExactSeries::kExact};
  const int order = min_order(a, b);
  std::size_t len = a.c_.size() + b.c_.size() - 1;
  if (order != ExactSeries::kExact) len = std::min(len, static_cast<std::size_t>(order + 1));
  std::vector<Rational> c(len);
  for (std::size_t i = 0; i < a.c_.size() && i < len; ++i) {
    for (std::size_t j = 0; j < b.c_.size() && i + j < len; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return {a.base_, std::move(c), order};
}

ExactSeries operator*(const Rational& k, const ExactSeries& a) {
  std::vector<Rational> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.c_[i];
  return {a.base_, std::move(c), a.order_};
}

ExactSeries operator/(const ExactSeries& a, const ExactSeries& b) {
  check_base(a, b);
  if (b.c_.empty() || b.c_[0] == 0) throw MathError("series division by a series with zero constant term");
  const int order = min_order(a, b);
  if (order == ExactSeries::kExact) throw std::invalid_argument("series division needs a finite order");
  std::vector<Rational> c(order + 1);
  for (int n = 0; n <= order; ++n) {
    Rational acc = static_cast<std::size_t>(n) < a.c_.size() ? a.c_[n] : Rational(0);
    for (int k = 1; k <= n && static_cast<std::size_t>(k) < b.c_.size(); ++k) acc -= b.c_[k] * c[n - k];
    c[n] = acc / b.c_[0];
  }
  return {b.base_, std::move(c), order};
}

ExactSeries ExactSeries::derivative() const {
  std::vector<Rational> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(Rational(static_cast<long>(i)) * c_[i]);
  return {base_, std::move(c), order_ == kExact ? kExact : order_ - 1};
}

ExactSeries ExactSeries::antiderivative() const {
  std::vector<Rational> c(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
  return {base_, std::move(c), order_ == kExact ? kExact : order_ + 1};
}

ExactSeries ExactSeries::sqrt(const Rational& root0) const {
  if (c_.empty() || c_[0] == 0 || root0 * root0 != c_[0]) {
    throw MathError("series square root needs a nonzero square constant term");
  }
  if (order_ == kExact) throw std::invalid_argument("series square root needs a finite order");
  std::vector<Rational> s(order_ + 1);
  s[0] = root0;
  for (int n = 1; n <= order_; ++n) {
    Rational acc = static_cast<std::size_t>(n) < c_.size() ? c_[n] : Rational(0);
    for (int k = 1; k < n; ++k) acc -= s[k] * s[n - k];
    s[n] = acc / (2 * root0);
  }
  return {base_, std::move(s), order_};
}

ExactSeries ExactSeries::truncated(int order) const { return {base_, c_, std::min(order, order_)}; }

double ExactSeries::evaluate(double h) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * h + it->get_d();
  return acc;
}

std::string ExactSeries::to_string(int max_terms) const {
  const std::string s = shift_text(base_);
  std::string out;
  int printed = 0;
  for (std::size_t n = 0; n < c_.size(); ++n) {
    if (c_[n] == 0) continue;
    if (max_terms >= 0 && printed == max_terms) {
      out += " + ...";
      break;
    }
    Rational c = c_[n];
    if (out.empty()) {
      if (c < 0) {
        out = "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    const std::string mono = n == 0 ? "" : n == 1 ? s : s + "^" + std::to_string(n);
    if (mono.empty()) {
      out += lvf::to_string(c);
    } else {
      out += c == 1 ? mono : lvf::to_string(c) + "*" + mono;
    }
    ++printed;
  }
  if (order_ != kExact) {
    const std::string big_o = "O(" + s + "^" + std::to_string(order_ + 1) + ")";
    out = out.empty() ? big_o : out + " + " + big_o;
  }
  return out.empty() ? "0" : out;
}

ExactSeries expand(const RationalFunction& f, const Rational& x0, int order) {
  if (!f.is_univariate_x()) throw std::invalid_argument("series expansion needs a function of x alone");
  const UPoly num = UPoly::from_polynomial(f.num()).shifted(x0);
  const UPoly den = UPoly::from_polynomial(f.den()).shifted(x0);
  if (den.coeff(0) == 0) throw MathError("x0 = " + to_string(x0) + " is a pole");
  return ExactSeries(x0, num.coeffs(), order) / ExactSeries(x0, den.coeffs(), order);
}

ExactSeries ode_series_solution(const RationalFunction& q, const Rational& x0, const Rational& f0,
                                const Rational& f1, int N) {
  if (N < 2) throw std::invalid_argument("series order must be at least 2");
  const ExactSeries Q = expand(q, x0, N - 2);
  std::vector<Rational> c(N + 1);
  c[0] = f0;
  c[1] = f1;
  for (int n = 0; n + 2 <= N; ++n) {
    Rational acc;
    for (int k = 0; k <= n; ++k) acc += Q.coeff(k) * c[n - k];
    c[n + 2] = -acc / Rational(static_cast<long>(n + 2) * (n + 1));
  }
  return {x0, std::move(c), N};
}

ExactSeries wronskian(const SolutionPair& pair) {
  return pair.f * pair.g.derivative() - pair.g * pair.f.derivative();
}

SolutionPair normalize(SolutionPair pair) {
  const ExactSeries w = wronskian(pair);
  if (w.order() < 0 || w.coeff(0) == 0) throw MathError("solutions are linearly dependent at the base point");
  pair.g = (1 / w.coeff(0)) * pair.g;
  pair.normalized = true;
  return pair;
}

SolutionPair fundamental_pair(const RationalFunction& q, const Rational& x0, int N) {
  return {ode_series_solution(q, x0, 1, 0, N), ode_series_solution(q, x0, 0, 1, N), true};
}

// SeriesPoly

void SeriesPoly::add_term(Key k, const ExactSeries& s) {
  if (s.is_exact() && s.is_zero()) return;
  if (s.base_point() != base_) throw std::invalid_argument("series at different base points");
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, s);
    return;
  }
  it->second = it->second + s;
  if (it->second.is_exact() && it->second.is_zero()) t_.erase(it);
}

ExactSeries SeriesPoly::coeff(unsigned i, unsigned j) const {
  const auto it = t_.find({i, j});
  return it == t_.end() ? ExactSeries::constant(base_, 0) : it->second;
}

int SeriesPoly::order() const {
  int o = ExactSeries::kExact;
  for (const auto& [k, s] : t_) o = std::min(o, s.order());
  return o;
}

bool SeriesPoly::is_zero() const {
  return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

SeriesPoly SeriesPoly::operator-() const {
  SeriesPoly out(base_);
  for (const auto& [k, s] : t_) out.add_term(k, -s);
  return out;
}

namespace {

const Rational& pick_base(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.terms().empty()) return b.base_point();
  if (!b.terms().empty() && a.base_point() != b.base_point()) {
    throw std::invalid_argument("series at different base points");
  }
  return a.base_point();
}

}  // namespace

SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly out(pick_base(a, b));
  for (const auto& [k, s] : a.t_) out.add_term(k, s);
  for (const auto& [k, s] : b.t_) out.add_term(k, s);
  return out;
}

SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) { return a + (-b); }

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly out(pick_base(a, b));
  for (const auto& [ka, sa] : a.t_) {
    for (const auto& [kb, sb] : b.t_) out.add_term({ka.first + kb.first, ka.second + kb.second}, sa * sb);
  }
  return out;
}

SeriesPoly SeriesPoly::derivative(Var v) const {
  SeriesPoly out(base_);
  for (const auto& [k, s] : t_) {
    switch (v) {
      case Var::x:
        out.add_term(k, s.derivative());
        break;
      case Var::y:
        if (k.first > 0) out.add_term({k.first - 1, k.second}, Rational(k.first) * s);
        break;
      case Var::z:
        if (k.second > 0) out.add_term({k.first, k.second - 1}, Rational(k.second) * s);
        break;
    }
  }
  return out;
}

std::string SeriesPoly::to_string() const {
  std::string out;
  for (const auto& [k, s] : t_) {
    if (s.is_zero()) continue;
    std::string mono;
    const auto power = [&mono](const char* v, unsigned e) {
      if (e == 0) return;
      mono += std::string(mono.empty() ? "" : "*") + v + (e == 1 ? "" : "^" + std::to_string(e));
    };
    power("y", k.first);
    power("z", k.second);
    const std::string coef = "(" + s.to_string(4) + ")";
    if (!out.empty()) out += " + ";
    out += mono.empty() ? coef : coef + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace lvf
