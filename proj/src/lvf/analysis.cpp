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


#include "lvf/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lvf/linear_solve.hpp"
#include "lvf/partial_fractions.hpp"

namespace lvf {

namespace {

void require_univariate(const RationalFunction& q) {
  if (!q.is_univariate_x()) throw std::invalid_argument("expected a function of x alone");
}

IndicialResult solve_indicial(std::optional<Rational> point, Rational c) {
  IndicialResult res{std::move(point), c, std::nullopt, false};
  if (const auto s = rational_sqrt(1 - 4 * c)) {
    const Rational lo = (1 - *s) / 2;
    const Rational hi = (1 + *s) / 2;
    res.roots = std::make_pair(lo, hi);
    res.has_integer_root = is_integer(lo) || is_integer(hi);
  }
  return res;
}

std::string join(const std::vector<long>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "}";
}

// Integer roots of an indicial result satisfying keep(r), plus 2.
std::vector<long> admissible_orders(const IndicialResult& r, bool below_two) {
  std::vector<long> out{2};
  if (r.roots) {
    for (const Rational& root : {r.roots->first, r.roots->second}) {
      if (!is_integer(root)) continue;
      const long v = root.get_num().get_si();
      if ((below_two && v < 2) || (!below_two && v > 2)) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UPoly x_power(unsigned n, const Rational& shift) { return pow(UPoly::x() - UPoly(shift), n); }

// Solves Dq(P''M^2 - 2P'M'M - P M''M + 2P M'^2) + Nq P M^2 = Dq M^3 for P of
// degree <= deg, with M = x^a (x - 1)^b.
std::optional<RationalFunction> solve_ansatz(const RationalFunction& q, unsigned a, unsigned b, int deg) {
  if (deg < 0) return std::nullopt;
  const UPoly nq = UPoly::from_polynomial(q.num());
  const UPoly dq = UPoly::from_polynomial(q.den());
  const UPoly m = x_power(a, 0) * x_power(b, 1);
  const UPoly m1 = m.derivative();
  const UPoly m2 = m1.derivative();
  std::vector<UPoly> cols;
  for (int j = 0; j <= deg; ++j) {
    const UPoly p = x_power(static_cast<unsigned>(j), 0);
    const UPoly p1 = p.derivative();
    const UPoly p2 = p1.derivative();
    cols.push_back(dq * (p2 * m * m - UPoly(2) * p1 * m1 * m - p * m2 * m + UPoly(2) * p * m1 * m1) + nq * p * m * m);
  }
  const UPoly rhs = dq * m * m * m;
  int rows = rhs.degree();
  for (const auto& c : cols) rows = std::max(rows, c.degree());
  Matrix<Rational> mat(rows + 1, std::vector<Rational>(cols.size()));
  std::vector<Rational> vec(rows + 1);
  for (int i = 0; i <= rows; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) mat[i][j] = cols[j].coeff(i);
    vec[i] = rhs.coeff(i);
  }
  const auto sol = solve_linear(std::move(mat), std::move(vec), Rational(0));
  if (!sol) return std::nullopt;
  const RationalFunction xi(UPoly(*sol).to_polynomial(), m.to_polynomial());
  const RationalFunction residual = xi.derivative(Var::x).derivative(Var::x) + q * xi - 1;
  if (!residual.is_zero()) throw std::logic_error("linear solve returned a non-solution");
  return xi;
}

}  // namespace

std::string IndicialResult::to_string() const {
  std::string out = "at " + (point ? lvf::to_string(*point) : std::string("infinity")) + ": r(r-1) + " + lvf::to_string(coefficient) + " = 0, roots ";
  if (roots) {
    out += lvf::to_string(roots->first) + ", " + lvf::to_string(roots->second);
  } else {
    out += "irrational";
  }
  return out + (has_integer_root ? " (integer root)" : " (no integer root)");
}

IndicialResult indicial_roots(const RationalFunction& q, const Rational& point) {
  require_univariate(q);
  const RationalFunction shift = RationalFunction::variable(Var::x) - RationalFunction(point);
  const RationalFunction f = q * shift * shift;
  if (UPoly::from_polynomial(f.den()).evaluate(point) == 0) {
    throw MathError("pole of order greater than 2 at x = " + lvf::to_string(point));
  }
  return solve_indicial(point, f.substitute(Var::x, point).constant_value());
}

IndicialResult indicial_roots_at_infinity(const RationalFunction& q) {
  require_univariate(q);
  Rational c = 0;
  if (!q.is_zero()) {
    const UPoly n = UPoly::from_polynomial(q.num());
    const UPoly d = UPoly::from_polynomial(q.den());
    const int s = d.degree() - n.degree();
    if (s < 2) throw MathError("q does not vanish to order 2 at infinity");
    if (s == 2) c = n.lc() / d.lc();
  }
  return solve_indicial(std::nullopt, c);
}

InhomogeneousResult rational_inhomogeneous_solution(const RationalFunction& q, int degree_bound) {
  require_univariate(q);
  {
    const UPoly d = UPoly::from_polynomial(q.den());
    const UPoly allowed = x_power(2, 0) * x_power(2, 1);
    if (!divmod(allowed, d).second.is_zero()) {
      throw MathError("q must have poles only at 0 and 1, of order at most 2");
    }
  }
  const IndicialResult at0 = indicial_roots(q, 0);
  const IndicialResult at1 = indicial_roots(q, 1);
  const std::vector<long> r0 = admissible_orders(at0, true);
  const std::vector<long> r1 = admissible_orders(at1, true);

  std::optional<std::vector<long>> dset;
  std::string at_inf = "q does not vanish to order 2 at infinity, degree unconstrained";
  const bool vanishes = q.is_zero() || UPoly::from_polynomial(q.den()).degree() -
                                               UPoly::from_polynomial(q.num()).degree() >= 2;
  if (vanishes) {
    const IndicialResult inf = indicial_roots_at_infinity(q);
    dset = admissible_orders(inf, false);
    at_inf = inf.to_string();
  }

  InhomogeneousResult res;
  const std::string summary = at0.to_string() + "; " + at1.to_string() + "; " + at_inf +
                              "; admissible orders r0 in " + join(r0) + ", r1 in " + join(r1) +
                              (dset ? ", degree in " + join(*dset) : std::string());
  long best_deg = -1;
  if (dset) {
    for (long a : r0) {
      for (long b : r1) {
        for (long d : *dset) {
          if (d >= a + b) best_deg = std::max(best_deg, d);
        }
      }
    }
    if (best_deg < 0) {
      res.status = InhomogeneousResult::Status::no_solution_certificate;
      res.explanation = summary + "; no choice has degree >= r0 + r1";
      return res;
    }
  } else {
    best_deg = degree_bound;
  }

  const auto a = static_cast<unsigned>(std::max(0L, -r0.front()));
  const auto b = static_cast<unsigned>(std::max(0L, -r1.front()));
  long deg = best_deg + static_cast<long>(a + b);
  const bool capped = deg > degree_bound;
  deg = std::min<long>(deg, degree_bound);
  if (auto xi = solve_ansatz(q, a, b, static_cast<int>(deg))) {
    res.status = InhomogeneousResult::Status::witness;
    res.xi = std::move(xi);
    res.explanation = summary + "; solution " + res.xi->to_string();
    return res;
  }
  const bool exhaustive = dset && !capped;
  res.status = exhaustive ? InhomogeneousResult::Status::no_solution_certificate
                          : InhomogeneousResult::Status::no_solution_bounded;
  res.explanation = summary + "; no numerator of degree <= " + std::to_string(deg) + " over x^" + std::to_string(a) +
                    "*(x - 1)^" + std::to_string(b) + (exhaustive ? "" : " (bounded search)");
  return res;
}

std::optional<RationalFunction> search_rational_solution(const RationalFunction& q, int max_pole_order,
                                                         int degree_bound) {
  require_univariate(q);
  const auto a = static_cast<unsigned>(std::max(0, max_pole_order));
  return solve_ansatz(q, a, a, degree_bound);
}

RationalFunction LogDerivativeWitness::product() const {
  RationalFunction out(1);
  for (const auto& [p, e] : factors) out *= pow(RationalFunction(p.to_polynomial()), e);
  return out;
}

std::string LogDerivativeWitness::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors) {
    const bool bare = p == UPoly::x();
    std::string base = bare ? "x" : "(" + p.to_string() + ")";
    if (!out.empty()) out += "*";
    out += e == 1 ? base : base + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return out;
}

LogDerivativeResult is_log_derivative(const OneForm<RationalFunction>& eta) {
  if (!eta.y.is_zero() || !eta.z.is_zero() || !eta.x.is_univariate_x()) {
    throw std::invalid_argument("log-derivative test needs a form R(x) dx");
  }
  LogDerivativeResult res;
  if (eta.x.is_zero()) {
    res.witness = LogDerivativeWitness{};
    return res;
  }
  const PartialFractionDecomposition pf = partial_fractions(eta.x);
  if (!pf.polynomial_part.is_zero()) {
    res.reason = "nonzero polynomial part " + pf.polynomial_part.to_string();
    return res;
  }
  LogDerivativeWitness w;
  for (const auto& t : pf.pole_terms) {
    const std::string at = " at root of " + t.root.to_string();
    if (t.order > 1) {
      res.reason = "pole of order " + std::to_string(t.order) + at;
      return res;
    }
    const UPoly dp = t.root.derivative();
    const Rational e = t.coefficient.lc() / dp.lc();
    if (!(dp * UPoly(e) == t.coefficient)) {
      res.reason = "residue is not constant" + at;
      return res;
    }
    if (!is_integer(e)) {
      res.reason = "residue " + lvf::to_string(e) + at + " is not an integer";
      return res;
    }
    w.factors.emplace_back(t.root, e.get_num().get_si());
  }
  res.witness = std::move(w);
  return res;
}

std::vector<std::vector<std::size_t>> block_partition(const std::vector<OneForm<RationalFunction>>& alphas) {
  std::vector<std::size_t> parent(alphas.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      if (find(i) == find(j)) continue;
      if (is_log_derivative(alphas[i] - alphas[j]).witness) parent[find(j)] = find(i);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(alphas.size(), SIZE_MAX);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const std::size_t r = find(i);
    if (block_of[r] == SIZE_MAX) {
      block_of[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(i);
  }
  return blocks;
}

}  // namespace lvf
