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


#include "lvf/slgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lvf {

namespace {

CycloNumber num(const CycloFieldPtr& f, const Rational& r) { return CycloNumber::constant(f, r); }
CycloNumber zeta(const CycloFieldPtr& f, long j) { return CycloNumber::zeta(f, j); }

// Quaternion a + b i + c j + d k as [[a + b i, c + d i], [-c + d i, a - b i]].
Mat2 quaternion(const CycloNumber& a, const CycloNumber& b, const CycloNumber& c, const CycloNumber& d,
                const CycloNumber& i) {
  return {a + b * i, c + d * i, -c + d * i, a - b * i};
}

Mat2 diag(const CycloNumber& u, const CycloNumber& v) {
  const auto& f = u.field();
  return {u, num(f, 0), num(f, 0), v};
}

bool commute(const Mat2& x, const Mat2& y) { return x * y == y * x; }

// Parallel test for 2-vectors.
bool parallel(const std::array<CycloNumber, 2>& u, const std::array<CycloNumber, 2>& v) {
  return (u[0] * v[1] - u[1] * v[0]).is_zero();
}

std::array<CycloNumber, 2> apply(const Mat2& m, const std::array<CycloNumber, 2>& v) {
  return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]};
}

}  // namespace

Mat2 Mat2::identity(const CycloFieldPtr& field) { return scalar(num(field, 1)); }

Mat2 Mat2::scalar(const CycloNumber& s) { return diag(s, s); }

Mat2 Mat2::inverse() const {
  const CycloNumber inv = det().inverse();
  return {d * inv, -b * inv, -c * inv, a * inv};
}

bool Mat2::is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }

bool operator<(const Mat2& x, const Mat2& y) {
  if (!(x.a == y.a)) return x.a < y.a;
  if (!(x.b == y.b)) return x.b < y.b;
  if (!(x.c == y.c)) return x.c < y.c;
  return x.d < y.d;
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
}

bool MatrixGroup::contains(const Mat2& g) const { return std::binary_search(elems_.begin(), elems_.end(), g); }

MatrixGroup closure(const CycloFieldPtr& field, const std::vector<Mat2>& generators, std::size_t cap) {
  const CycloNumber one = num(field, 1);
  for (const auto& g : generators) {
    if (!(g.det() == one)) throw MathError("generator " + g.to_string() + " does not have determinant 1");
  }
  std::set<Mat2> seen{Mat2::identity(field)};
  std::deque<Mat2> todo{Mat2::identity(field)};
  while (!todo.empty()) {
    const Mat2 x = todo.front();
    todo.pop_front();
    for (const auto& g : generators) {
      Mat2 y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw MathError("closure exceeded " + std::to_string(cap) + " elements");
        todo.push_back(std::move(y));
      }
    }
  }
  return {field, generators, std::vector<Mat2>(seen.begin(), seen.end())};
}

GroupSpec GroupSpec::parse(const std::string& tag) {
  if (tag == "2T") return {GroupKind::tetrahedral, 0};
  if (tag == "2O") return {GroupKind::octahedral, 0};
  if (tag == "2I") return {GroupKind::icosahedral, 0};
  if (tag.size() > 2 && (tag[0] == 'C' || tag[0] == 'D') && tag[1] == ':') {
    const std::string digits = tag.substr(2);
    if (digits.size() <= 4 && digits.find_first_not_of("0123456789") == std::string::npos) {
      const auto n = static_cast<unsigned>(std::stoul(digits));
      if (tag[0] == 'C' && n >= 1) return {GroupKind::cyclic, n};
      if (tag[0] == 'D' && n >= 2) return {GroupKind::dihedral, n};
    }
  }
  throw std::invalid_argument("unknown group tag '" + tag + "'");
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case GroupKind::cyclic:
      return "C:" + std::to_string(n);
    case GroupKind::dihedral:
      return "D:" + std::to_string(n);
    case GroupKind::tetrahedral:
      return "2T";
    case GroupKind::octahedral:
      return "2O";
    case GroupKind::icosahedral:
      return "2I";
  }
  return "?";
}

MatrixGroup binary_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::cyclic: {
      const auto f = make_cyclo_field(spec.n);
      return closure(f, {diag(zeta(f, 1), zeta(f, -1))});
    }
    case GroupKind::dihedral: {
      const auto f = make_cyclo_field(2 * spec.n);
      const Mat2 s{num(f, 0), num(f, 1), num(f, -1), num(f, 0)};
      return closure(f, {diag(zeta(f, 1), zeta(f, -1)), s});
    }
    case GroupKind::tetrahedral:
    case GroupKind::octahedral: {
      const auto f = make_cyclo_field(8);
      const CycloNumber i = zeta(f, 2);
      const CycloNumber o = num(f, 0);
      const CycloNumber l = num(f, 1);
      const CycloNumber h = num(f, Rational(1, 2));
      std::vector<Mat2> gens{quaternion(o, l, o, o, i), quaternion(o, o, l, o, i), quaternion(h, h, h, h, i)};
      // (1 + i)/sqrt(2) = zeta_8.
      if (spec.kind == GroupKind::octahedral) gens.push_back(diag(zeta(f, 1), zeta(f, -1)));
      return closure(f, gens);
    }
    case GroupKind::icosahedral: {
      const auto f = make_cyclo_field(20);
      const CycloNumber i = zeta(f, 5);
      const CycloNumber h = num(f, Rational(1, 2));
      // With z5 = zeta_20^4: phi = 1 + z5 + z5^4 and 1/phi = z5 + z5^4.
      const CycloNumber inv_phi = zeta(f, 4) + zeta(f, 16);
      const CycloNumber phi = num(f, 1) + inv_phi;
      return closure(f, {quaternion(h, h, h, h, i), quaternion(h * phi, h * inv_phi, h, num(f, 0), i)});
    }
  }
  throw std::invalid_argument("unknown group kind");
}

bool is_abelian(const MatrixGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

std::size_t element_order(const Mat2& m) {
  const Mat2 id = Mat2::identity(m.a.field());
  Mat2 p = m;
  std::size_t k = 1;
  while (!(p == id)) {
    p = p * m;
    if (++k > 100000) throw MathError("element of infinite or very large order");
  }
  return k;
}

bool is_cyclic(const MatrixGroup& g) {
  return std::any_of(g.elements().begin(), g.elements().end(),
                     [&](const Mat2& m) { return element_order(m) == g.order(); });
}

std::optional<std::array<CycloNumber, 2>> common_eigenvector(const MatrixGroup& g) {
  const auto& f = g.field();
  const CycloNumber zero = num(f, 0);
  const CycloNumber one = num(f, 1);
  const auto it = std::find_if(g.generators().begin(), g.generators().end(),
                               [](const Mat2& m) { return !m.is_scalar(); });
  std::vector<std::array<CycloNumber, 2>> candidates;
  if (it == g.generators().end()) {
    candidates.push_back({one, zero});
  } else {
    const Mat2& m = *it;
    const long cond = static_cast<long>(f->conductor());
    const long span = cond % 2 == 0 ? cond : 2 * cond;  // roots of unity in Q(zeta_m) include -1
    for (long j = 0; j < span; ++j) {
      const CycloNumber lam = j < cond ? zeta(f, j) : -zeta(f, j - cond);
      if (!(lam * lam - m.trace() * lam + one).is_zero()) continue;
      std::array<CycloNumber, 2> v{zero, zero};
      if (!m.b.is_zero()) {
        v = {m.b, lam - m.a};
      } else if (!m.c.is_zero()) {
        v = {lam - m.d, m.c};
      } else {
        v = m.a == lam ? std::array<CycloNumber, 2>{one, zero} : std::array<CycloNumber, 2>{zero, one};
      }
      candidates.push_back(v);
    }
  }
  for (const auto& v : candidates) {
    const bool shared = std::all_of(g.generators().begin(), g.generators().end(),
                                    [&](const Mat2& m) { return parallel(apply(m, v), v); });
    if (shared) return v;
  }
  return std::nullopt;
}

bool has_common_eigenvector(const MatrixGroup& g) {
  const bool abelian = is_abelian(g);
  if (abelian && !common_eigenvector(g)) {
    throw std::logic_error("abelian group without an explicit common eigenvector");
  }
  return abelian;
}

std::vector<MatrixGroup> index_two_subgroups(const MatrixGroup& g) {
  const auto& f = g.field();
  std::set<Mat2> squares;
  for (const auto& x : g.elements()) squares.insert(x * x);
  const MatrixGroup h0 = closure(f, std::vector<Mat2>(squares.begin(), squares.end()));

  // G / h0 is elementary abelian; pick a basis b_1..b_k of it.
  std::vector<Mat2> basis;
  MatrixGroup span = h0;
  while (span.order() < g.order()) {
    const auto next = std::find_if(g.elements().begin(), g.elements().end(),
                                   [&](const Mat2& x) { return !span.contains(x); });
    basis.push_back(*next);
    std::vector<Mat2> gens = span.generators();
    gens.push_back(*next);
    span = closure(f, gens);
  }
  const std::size_t k = basis.size();
  if (k >= 8) throw MathError("quotient by squares is unexpectedly large");

  // Products over subsets of the basis represent the cosets.
  std::vector<Mat2> rep(std::size_t{1} << k, Mat2::identity(f));
  for (std::size_t s = 1; s < rep.size(); ++s) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(s));
    rep[s] = rep[s & (s - 1)] * basis[low];
  }

  std::vector<MatrixGroup> out;
  for (std::size_t phi = 1; phi < rep.size(); ++phi) {
    std::vector<Mat2> gens = h0.generators();
    for (std::size_t s = 1; s < rep.size(); ++s) {
      if (__builtin_popcountll(s & phi) % 2 == 0) gens.push_back(rep[s]);
    }
    MatrixGroup sub = closure(f, gens);
    if (2 * sub.order() != g.order()) throw std::logic_error("index-two kernel has the wrong order");
    out.push_back(std::move(sub));
  }
  return out;
}

std::size_t pgl_projection_order(const MatrixGroup& g) {
  const auto& f = g.field();
  const bool has_minus = g.contains(Mat2::scalar(num(f, -1)));
  return has_minus ? g.order() / 2 : g.order();
}

}  // namespace lvf
