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


#include <doctest.h>

#include <algorithm>
#include <map>

#include "lvf/analysis.hpp"
#include "lvf/families.hpp"
#include "lvf/parser.hpp"
#include "support/random_algebra.hpp"

using namespace lvf;
using lvf::testing::Rng;
using F1 = OneForm<RationalFunction>;

namespace {

RationalFunction P(const char* s) { return parse_expression(s); }
F1 dx(const RationalFunction& r) { return {r, 0, 0}; }

}  // namespace

TEST_CASE("indicial roots") {
  const RationalFunction q = platonic_q(TriangleParameters::from_tag("223"));
  const IndicialResult r0 = indicial_roots(q, 0);
  CHECK(r0.coefficient == Rational(3, 16));
  REQUIRE(r0.roots.has_value());
  CHECK(r0.roots->first == Rational(1, 4));
  CHECK(r0.roots->second == Rational(3, 4));
  CHECK_FALSE(r0.has_integer_root);

  const IndicialResult r3 = indicial_roots(platonic_q(TriangleParameters::from_tag("233")), 1);
  CHECK(r3.coefficient == Rational(2, 9));
  CHECK(r3.roots->first == Rational(1, 3));
  CHECK(r3.roots->second == Rational(2, 3));

  const IndicialResult flat = indicial_roots(RationalFunction(), 0);
  CHECK(flat.coefficient == 0);
  CHECK(flat.roots->first == 0);
  CHECK(flat.roots->second == 1);
  CHECK(flat.has_integer_root);

  CHECK_FALSE(indicial_roots(P("1/x^2"), 0).roots.has_value());
  CHECK_THROWS_AS(indicial_roots(P("1/x^3"), 0), MathError);
  CHECK_THROWS_AS(indicial_roots(P("y/x^2"), 0), std::invalid_argument);
  CHECK(indicial_roots_at_infinity(q).coefficient == Rational(2, 9));
  CHECK_THROWS_AS(indicial_roots_at_infinity(P("1/x")), MathError);
  CHECK(indicial_roots(q, 0).to_string() == "at 0: r(r-1) + 3/16 = 0, roots 1/4, 3/4 (no integer root)");
}

TEST_CASE("indicial roots match the closed form") {
  for (long m = 2; m <= 12; ++m) {
    const RationalFunction q(Rational(1, 4) * (1 - Rational(1, m * m)));
    const IndicialResult r = indicial_roots(q * P("1/x^2"), 0);
    REQUIRE(r.roots.has_value());
    CHECK(r.roots->first == (1 - Rational(1, m)) / 2);
    CHECK(r.roots->second == (1 + Rational(1, m)) / 2);
  }
}

TEST_CASE("inhomogeneous equation") {
  for (const char* tag : {"233", "234", "235", "223", "225"}) {
    CAPTURE(tag);
    const auto res = rational_inhomogeneous_solution(platonic_q(TriangleParameters::from_tag(tag)));
    CHECK(res.status == InhomogeneousResult::Status::no_solution_certificate);
    CHECK(res.explanation.find("no choice has degree >= r0 + r1") != std::string::npos);
  }
  const auto flat = rational_inhomogeneous_solution(RationalFunction());
  REQUIRE(flat.status == InhomogeneousResult::Status::witness);
  CHECK(flat.xi->derivative(Var::x).derivative(Var::x) == RationalFunction(1));
  CHECK(*flat.xi == P("x^2/2"));
  const auto one = rational_inhomogeneous_solution(RationalFunction(1));
  REQUIRE(one.status == InhomogeneousResult::Status::witness);
  CHECK(*one.xi == RationalFunction(1));
  CHECK_THROWS_AS(rational_inhomogeneous_solution(P("1/(x-2)")), MathError);
  CHECK_THROWS_AS(rational_inhomogeneous_solution(P("1/x^3")), MathError);
}

TEST_CASE("property: certificate agrees with brute force") {
  Rng rng(61);
  const std::vector<Rational> roots{-2, -1, 0, Rational(1, 3), Rational(1, 4), Rational(1, 2), Rational(2, 5)};
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
  int witnesses = 0;
  for (int i = 0; i < 20; ++i) {
    const Rational a = roots[pick(rng)];
    const Rational c = roots[pick(rng)];
    const Rational b = lvf::testing::random_rational(rng, 4, 3);
    const RationalFunction q = RationalFunction(a * (1 - a)) * P("1/x^2") + RationalFunction(b) * P("1/(x*(x-1))") +
                               RationalFunction(c * (1 - c)) * P("1/(x-1)^2");
    CAPTURE(q.to_string());
    const auto res = rational_inhomogeneous_solution(q, 20);
    const auto brute = search_rational_solution(q, 4, 14);
    if (res.status == InhomogeneousResult::Status::no_solution_certificate) CHECK_FALSE(brute.has_value());
    if (res.status == InhomogeneousResult::Status::witness) {
      ++witnesses;
      CHECK(brute.has_value());
    }
  }
  CHECK(witnesses >= 1);
  // Planted solution xi = x^2 - x, which forces q = -1/(x(x-1)).
  const RationalFunction xi = P("x^2 - x");
  const RationalFunction q = (RationalFunction(1) - xi.derivative(Var::x).derivative(Var::x)) / xi;
  const auto planted = rational_inhomogeneous_solution(q);
  REQUIRE(planted.status == InhomogeneousResult::Status::witness);
  CHECK(search_rational_solution(q, 2, 6).has_value());
}

TEST_CASE("logarithmic derivatives") {
  const auto w = is_log_derivative(dx(P("2/x + 3/(x-1)")));
  REQUIRE(w.witness.has_value());
  CHECK(w.witness->product() == P("x^2*(x-1)^3"));
  CHECK(w.witness->to_string() == "(x - 1)^3*x^2");
  const auto half = is_log_derivative(dx(P("1/(2*x)")));
  CHECK_FALSE(half.witness.has_value());
  CHECK(half.reason.find("1/2") != std::string::npos);
  CHECK_FALSE(is_log_derivative(dx(1)).witness.has_value());
  CHECK_FALSE(is_log_derivative(dx(P("1/x^2"))).witness.has_value());
  CHECK(is_log_derivative(dx(P("2*x/(x^2+1)"))).witness->product() == P("x^2 + 1"));
  CHECK_FALSE(is_log_derivative(dx(P("1/(x^2+1)"))).witness.has_value());
  CHECK(is_log_derivative(dx(0)).witness->factors.empty());
  CHECK_THROWS_AS(is_log_derivative(F1{0, P("1/y"), 0}), std::invalid_argument);
  CHECK_THROWS_AS(is_log_derivative(dx(P("1/y"))), std::invalid_argument);
}

TEST_CASE("block partition") {
  CHECK(block_partition({dx(0), dx(P("1/x"))}).size() == 1);
  CHECK(block_partition({dx(0), dx(P("1/(2*x)"))}).size() == 2);
  const RationalFunction hbar = P("(2*x-1)/(4*x*(x-1))");
  CHECK(block_partition({dx(-hbar), dx(-hbar)}).size() == 1);
  const auto blocks = block_partition({dx(0), dx(P("1/(2*x)")), dx(P("3/x")), dx(P("-1/(2*x)"))});
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<std::size_t>{0, 2});
  CHECK(blocks[1] == std::vector<std::size_t>{1, 3});
}

TEST_CASE("property: log-derivative round trip") {
  Rng rng(62);
  std::uniform_int_distribution<long> exp(-3, 3);
  std::uniform_int_distribution<int> count(1, 4);
  for (int i = 0; i < 100; ++i) {
    std::map<std::vector<Rational>, std::pair<UPoly, long>> planted;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
      const Rational c = lvf::testing::random_rational(rng, 6, 3);
      const UPoly p = k % 2 == 0 ? UPoly::x() - UPoly(c) : UPoly::x() * UPoly::x() + UPoly(c * c + 1);
      long e = exp(rng);
      if (e == 0) e = 1;
      planted[p.coeffs()] = {p, e};
    }
    RationalFunction l(1);
    for (const auto& [key, pe] : planted) l *= pow(RationalFunction(pe.first.to_polynomial()), pe.second);
    const auto res = is_log_derivative(dx(l.derivative(Var::x) / l));
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->product() == l);
    CHECK(res.witness->factors.size() == planted.size());
    // Half of it is refused as soon as one exponent is odd.
    const bool odd = std::any_of(planted.begin(), planted.end(), [](const auto& kv) { return kv.second.second % 2 != 0; });
    if (odd) CHECK_FALSE(is_log_derivative(dx(RationalFunction(Rational(1, 2)) * l.derivative(Var::x) / l)).witness.has_value());
  }
}

TEST_CASE("property: block partition is an equivalence") {
  Rng rng(63);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int i = 0; i < 30; ++i) {
    std::vector<F1> alphas;
    for (int k = 0; k < 6; ++k) {
      alphas.push_back(dx(RationalFunction(Rational(coef(rng), 2)) * P("1/x") +
                          RationalFunction(Rational(coef(rng), 2)) * P("1/(x-1)")));
    }
    const auto blocks = block_partition(alphas);
    std::vector<int> block_of(alphas.size(), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t j : blocks[b]) {
        CHECK(block_of[j] == -1);
        block_of[j] = static_cast<int>(b);
      }
    }
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      for (std::size_t b = 0; b < alphas.size(); ++b) {
        const bool related = is_log_derivative(alphas[a] - alphas[b]).witness.has_value();
        CHECK(related == (block_of[a] == block_of[b]));
      }
    }
  }
}
