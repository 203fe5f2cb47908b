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

#include "lvf/descent.hpp"
#include "lvf/forms.hpp"
#include "lvf/parser.hpp"
#include "support/random_algebra.hpp"

using namespace lvf;
using lvf::testing::Rng;
using F1 = OneForm<RationalFunction>;
using F2 = TwoForm<RationalFunction>;

namespace {

RationalFunction P(const char* s) { return parse_expression(s); }

F1 random_one_form(Rng& rng) {
  return {lvf::testing::random_rational_function(rng, 2, 2), lvf::testing::random_rational_function(rng, 2, 2),
          lvf::testing::random_rational_function(rng, 2, 2)};
}

const F1 kDx{1, 0, 0};
const F1 kDy{0, 1, 0};

}  // namespace

TEST_CASE("vector field to two-form") {
  CHECK(vf_to_twoform({0, 0, 1}) == F2{0, 0, 1});
  CHECK(vf_to_twoform({1, 0, 0}) == F2{1, 0, 0});
  const RationalFunction q = P("x");
  CHECK(vf_to_twoform({1, q * P("z") - 1, P("-y")}) == F2{1, P("x*z - 1"), P("-y")});
  CHECK(to_string(vf_to_twoform({1, P("x*z-1"), P("-y")})) == "dy^dz + (x*z - 1)*dz^dx - y*dx^dy");
}

TEST_CASE("wedge products") {
  CHECK(wedge(kDx, kDy) == F2{0, 0, 1});
  const F1 w{P("x"), P("y*z"), 3};
  CHECK(wedge(w, w).is_zero());
  CHECK(wedge(kDx, F2{1, 0, 0}).c == RationalFunction(1));
  CHECK(wedge(kDx, F2{0, 0, 1}).is_zero());
  CHECK(to_string(wedge(kDx, F2{1, 0, 0})) == "dx^dy^dz");
}

TEST_CASE("exterior derivative") {
  CHECK(d(P("x*y")) == F1{P("y"), P("x"), 0});
  CHECK(d(RationalFunction(Rational(7, 3))).is_zero());
  CHECK(d(F1{P("y"), 0, 0}) == F2{0, 0, -1});
  CHECK(d(F1{P("1/(x*(x-1))"), 0, 0}).is_zero());

  const auto ctx = make_radical_context(2, P("x*(x-1)"));
  const OneForm<RadicalFunction> dt = d(radical_generator(ctx));
  CHECK(dt.x == RadicalFunction(ctx, {0, P("(2*x-1)/(2*x*(x-1))")}));
  CHECK(dt.y.is_zero());
}

TEST_CASE("check_probsetup") {
  const auto ok = check_probsetup(kDx, F1{0, 0, 0}, F2{0, 0, 1});
  CHECK(ok.all_pass());
  CHECK(ok.checks().size() == 3);

  const auto bad = check_probsetup(kDx, F1{0, 0, 0}, F2{1, 0, 0});
  REQUIRE(bad.checks().size() == 3);
  CHECK_FALSE(bad.checks()[0].pass);
  CHECK(bad.checks()[0].witness == "dx^dy^dz");
  CHECK(bad.checks()[1].pass);
  CHECK(bad.checks()[2].pass);
  CHECK_THROWS_AS(check_probsetup(F1{0, 0, 0}, F1{0, 0, 0}, F2{1, 0, 0}), MathError);
}

TEST_CASE("gauge transform and normalization") {
  const F1 w{P("x"), P("y"), 0};
  const F1 a{P("1/x"), 0, 0};
  const auto [w1, a1] = gauge_transform(w, a, RationalFunction(1));
  CHECK(w1 == w);
  CHECK(a1 == a);
  const RationalFunction l1 = P("x + y");
  const RationalFunction l2 = P("z^2 - 1/x");
  const auto [u, b] = gauge_transform(w, a, l1);
  const auto twice = gauge_transform(u, b, l2);
  const auto once = gauge_transform(w, a, l1 * l2);
  CHECK(twice.first == once.first);
  CHECK(twice.second == once.second);
  CHECK_THROWS_AS(gauge_transform(w, a, RationalFunction()), MathError);

  CHECK(normalize_leading(F1{2, P("2*y"), 0}) == F1{1, P("y"), 0});
  const auto ctx = make_radical_context(2, P("x*(x-1)"));
  const RadicalFunction zero = radical_embed(ctx, 0);
  const OneForm<RadicalFunction> s{zero, radical_generator(ctx), zero};
  CHECK(normalize_leading(s) == OneForm<RadicalFunction>{zero, radical_embed(ctx, 1), zero});
  CHECK_THROWS_AS(normalize_leading(F1{0, 0, 0}), MathError);
  const RationalFunction f = P("x^2 + y");
  const F1 v{f * P("y"), f, f * P("z")};
  CHECK(normalize_leading(v) == gauge_transform(v, F1{0, 0, 0}, v.x).first);
}

TEST_CASE("property: d o d = 0") {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction f = lvf::testing::random_rational_function(rng, 3, 2);
    CHECK(d(d(f)).is_zero());
    CHECK(d(d(random_one_form(rng))).is_zero());
  }
  const auto ctx = make_radical_context(2, P("x*y - z"));
  for (int i = 0; i < 20; ++i) {
    const RadicalFunction g(ctx, {lvf::testing::random_rational_function(rng, 2, 2),
                                  lvf::testing::random_rational_function(rng, 2, 2)});
    CHECK(d(d(g)).is_zero());
  }
}

TEST_CASE("property: Leibniz rule for forms") {
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction f = lvf::testing::random_rational_function(rng, 2, 2);
    const F1 w = random_one_form(rng);
    CHECK(d(f * w) == wedge(d(f), w) + f * d(w));
  }
}

TEST_CASE("property: wedge antisymmetry and orientation") {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const F1 a = random_one_form(rng);
    const F1 b = random_one_form(rng);
    const F1 c = random_one_form(rng);
    CHECK(wedge(a, b) == -wedge(b, a));
    // a^(b^c) = (a^b)^c = c^(a^b): the 1-by-2 formula against the 1-by-1 one.
    CHECK(wedge(a, wedge(b, c)) == wedge(c, wedge(a, b)));
    const RationalFunction det = a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
                                 a.z * (b.x * c.y - b.y * c.x);
    CHECK(wedge(a, wedge(b, c)).c == det);
  }
}

TEST_CASE("property: check_probsetup is gauge invariant") {
  Rng rng(34);
  int passing = 0;
  for (int i = 0; i < 100; ++i) {
    F1 w;
    F1 a;
    F2 Om;
    if (i % 2 == 0) {
      // omega = f d(phi), alpha = df/f, Omega = d(phi)^d(psi): all three hold.
      const RationalFunction f = lvf::testing::random_nonzero_rational_function(rng, 2, 2);
      const RationalFunction phi = lvf::testing::random_rational_function(rng, 2, 2);
      const RationalFunction psi = lvf::testing::random_rational_function(rng, 2, 2);
      w = f * d(phi);
      a = (RationalFunction(1) / f) * d(f);
      Om = wedge(d(phi), d(psi));
    } else {
      w = random_one_form(rng);
      a = random_one_form(rng);
      Om = F2{lvf::testing::random_rational_function(rng, 2, 2), lvf::testing::random_rational_function(rng, 2, 2),
              lvf::testing::random_rational_function(rng, 2, 2)};
    }
    if (w.is_zero()) continue;
    const RationalFunction l = lvf::testing::random_nonzero_rational_function(rng, 2, 2);
    const auto [w2, a2] = gauge_transform(w, a, l);
    const auto before = check_probsetup(w, a, Om);
    const auto after = check_probsetup(w2, a2, Om);
    for (std::size_t k = 0; k < 3; ++k) CHECK(before.checks()[k].pass == after.checks()[k].pass);
    if (before.all_pass()) ++passing;
  }
  CHECK(passing >= 40);
}
