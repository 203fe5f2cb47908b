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

#include "lvf/families.hpp"
#include "lvf/parser.hpp"
#include "lvf/partial_fractions.hpp"

using namespace lvf;

namespace {

RationalFunction P(const char* s) { return parse_expression(s); }

}  // namespace

TEST_CASE("family tags") {
  CHECK(TriangleParameters::from_tag("233").tag == GroupTag::tetrahedral);
  CHECK(TriangleParameters::from_tag("234").tag == GroupTag::octahedral);
  CHECK(TriangleParameters::from_tag("235").tag == GroupTag::icosahedral);
  const auto d7 = TriangleParameters::from_tag("22N:7");
  CHECK(d7.tag == GroupTag::dihedral);
  CHECK(d7.p == 7);
  const auto perm = TriangleParameters::from_tag("322");
  CHECK(perm.m == 3);
  CHECK(perm.n == 2);
  CHECK(perm.p == 2);
  CHECK(perm.tag == GroupTag::dihedral);
  CHECK(TriangleParameters::from_tag("532").to_string() == "(5,3,2)");
  CHECK_THROWS_AS(TriangleParameters::from_tag("236"), std::invalid_argument);
  CHECK_THROWS_AS(TriangleParameters::from_tag("22N:2"), std::invalid_argument);
  CHECK_THROWS_AS(TriangleParameters::from_tag("22N:"), std::invalid_argument);
  CHECK_THROWS_AS(TriangleParameters::from_tag("abc"), std::invalid_argument);
}

TEST_CASE("platonic potentials") {
  CHECK(platonic_q(TriangleParameters::from_tag("223")) ==
        P("3/(16*x^2) - 11/(72*x*(x-1)) + 3/(16*(x-1)^2)"));
  CHECK(platonic_q(TriangleParameters::from_tag("233")) == P("3/(16*x^2) - 3/(16*x*(x-1)) + 2/(9*(x-1)^2)"));
  // Permuting (m, n) swaps x and 1 - x.
  const RationalFunction a = platonic_q(TriangleParameters::from_triple(2, 3, 5));
  const RationalFunction b = platonic_q(TriangleParameters::from_triple(3, 2, 5));
  CHECK(a.substitute(Var::x, Rational(1, 3)) == b.substitute(Var::x, Rational(2, 3)));
}

TEST_CASE("exceptional system") {
  const auto s = build_system(TriangleParameters::from_tag("234"));
  CHECK(s.Omega.p == RationalFunction(1));
  CHECK(s.Omega.q == s.q * P("z") - 1);
  CHECK(s.Omega.r == P("-y"));
}

TEST_CASE("D3 bundle satisfies both triples") {
  const auto b = d3_bundle();
  CHECK(check_probsetup(b.omega1, b.alpha1, b.Omega).all_pass());
  CHECK(check_probsetup(b.omega2, b.alpha2, b.Omega).all_pass());
  // h1 + h2 lies in the base field.
  CHECK((b.h1 + b.h2).in_base());
  CHECK((b.h1 + b.h2).coeff(0) == P("(2*x-1)/(2*x*(x-1))"));
  // Riccati equation h' + h^2 + q = 0.
  const RadicalFunction ric = b.h1.differentiate(Var::x) + b.h1 * b.h1 + radical_embed(b.ctx, b.system.q);
  CHECK(ric.is_zero());
}

TEST_CASE("D3 Wronskian normalisation") {
  const auto b = d3_bundle();
  const TwoForm<RadicalFunction> w = wedge(b.omega1, b.omega2);
  // omega1 ^ omega2 = -(1/(3 sqrt(k))) Omega = -(t/(3k)) Omega.
  const RadicalFunction factor(b.ctx, {0, -RationalFunction(1) / (RationalFunction(3) * b.k)});
  CHECK(w.p == factor * b.Omega.p);
  CHECK(w.q == factor * b.Omega.q);
  CHECK(w.r == factor * b.Omega.r);
  CHECK(w.p == b.h2 - b.h1);
}

TEST_CASE("averaging the cofactor over the Galois group") {
  // omega = f d(phi) is defined over the base; alpha = df/f + t d(phi) with
  // t^2 = phi lives upstairs. Its average is again a cofactor.
  const RationalFunction f = P("x + y^2");
  const RationalFunction phi = P("x*z + 1");
  const auto ctx = make_radical_context(2, phi);
  const OneForm<RationalFunction> w = f * d(phi);
  const OneForm<RadicalFunction> alpha =
      embed_form(ctx, (RationalFunction(1) / f) * d(f)) + radical_generator(ctx) * embed_form(ctx, d(phi));
  const TwoForm<RationalFunction> Om = wedge(d(phi), d(P("y")));
  CHECK(check_probsetup(embed_form(ctx, w), alpha, embed_form(ctx, Om)).all_pass());
  const OneForm<RationalFunction> mean = galois_average(alpha);
  CHECK(mean == (RationalFunction(1) / f) * d(f));
  CHECK(check_probsetup(w, mean, Om).all_pass());
}

TEST_CASE("averaging the D3 forms themselves") {
  const auto b = d3_bundle();
  const RationalFunction hbar = P("(2*x-1)/(4*x*(x-1))");
  const OneForm<RationalFunction> mean = galois_average(std::vector{b.omega1, b.omega2});
  CHECK(mean == OneForm<RationalFunction>{1 - b.system.q * P("z") + P("y") * hbar, 1, hbar});
  CHECK(galois_average(b.alpha1) == OneForm<RationalFunction>{-hbar, 0, 0});
  // The mean of the forms is not itself integrable with the mean cofactor:
  // averaging applies to the cofactor of a fixed base-field form only.
  const auto report = check_probsetup(mean, galois_average(b.alpha1), b.system.Omega);
  CHECK(report.checks()[0].pass);
  CHECK_FALSE(report.checks()[1].pass);
}

TEST_CASE("property: potentials have double poles at 0 and 1 only") {
  std::vector<TriangleParameters> all;
  for (const char* t : {"233", "323", "332", "234", "432", "235", "352", "523"}) all.push_back(TriangleParameters::from_tag(t));
  for (unsigned n = 3; n < 15; ++n) {
    all.push_back(TriangleParameters::from_triple(2, 2, n));
    all.push_back(TriangleParameters::from_triple(n, 2, 2));
    all.push_back(TriangleParameters::from_triple(2, n, 2));
  }
  CHECK(all.size() >= 20);
  for (const auto& t : all) {
    CAPTURE(t.to_string());
    const RationalFunction q = platonic_q(t);
    const auto pf = partial_fractions(q);
    CHECK(pf.polynomial_part.is_zero());
    const auto at0 = pf.find(UPoly::x(), 2);
    const auto at1 = pf.find(UPoly::x() - UPoly(1), 2);
    REQUIRE(at0 != nullptr);
    REQUIRE(at1 != nullptr);
    CHECK(at0->coefficient == UPoly((1 - Rational(1, t.m * t.m)) / 4));
    CHECK(at1->coefficient == UPoly((1 - Rational(1, t.n * t.n)) / 4));
    for (const auto& term : pf.pole_terms) {
      CHECK(term.root.degree() == 1);
      CHECK(term.order <= 2);
    }
  }
}
