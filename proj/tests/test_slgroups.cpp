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

#include "lvf/slgroups.hpp"

using namespace lvf;

namespace {

MatrixGroup G(const char* tag) { return binary_group(GroupSpec::parse(tag)); }

}  // namespace

TEST_CASE("cyclotomic arithmetic used by the groups") {
  const auto f8 = make_cyclo_field(8);
  CHECK(CycloNumber::zeta(f8, 4) == CycloNumber::constant(f8, -1));
  const auto f6 = make_cyclo_field(6);
  CHECK(CycloNumber::zeta(f6, 1) + CycloNumber::zeta(f6, -1) == CycloNumber::constant(f6, 1));
  const auto f7 = make_cyclo_field(7);
  CHECK(CycloNumber::zeta(f7, 1).inverse() == CycloNumber::zeta(f7, 6));
  CHECK_THROWS_AS(CycloNumber::zeta(f7, 1) + CycloNumber::zeta(f8, 1), MathError);
}

TEST_CASE("closure") {
  const auto f6 = make_cyclo_field(6);
  CHECK(closure(f6, {Mat2::identity(f6)}).order() == 1);
  const CycloNumber z = CycloNumber::zeta(f6, 1);
  const CycloNumber o = CycloNumber::constant(f6, 0);
  const CycloNumber one = CycloNumber::constant(f6, 1);
  const Mat2 r{z, o, o, z.inverse()};
  const Mat2 s{o, one, -one, o};
  CHECK(closure(f6, {r, s}).order() == 12);
  // diag(2, 1/2) has det 1 and infinite order.
  const Mat2 big{CycloNumber::constant(f6, 2), o, o, CycloNumber::constant(f6, Rational(1, 2))};
  CHECK_THROWS_AS(closure(f6, {big}, 50), MathError);
  CHECK_THROWS_AS(closure(f6, {Mat2{one, o, o, z}}), MathError);
}

TEST_CASE("catalog orders") {
  CHECK(G("C:5").order() == 5);
  CHECK(G("D:3").order() == 12);
  CHECK(G("2T").order() == 24);
  CHECK(G("2O").order() == 48);
  CHECK(G("2I").order() == 120);
  CHECK(G("2T").field()->conductor() == 8);
  CHECK(G("2I").field()->conductor() == 20);
  CHECK_THROWS_AS(GroupSpec::parse("D:1"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("C:0"), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::parse("3T"), std::invalid_argument);
  CHECK(GroupSpec::parse("D:7").to_string() == "D:7");
}

TEST_CASE("common eigenvectors") {
  CHECK(has_common_eigenvector(G("C:6")));
  CHECK_FALSE(has_common_eigenvector(G("D:3")));
  CHECK_FALSE(has_common_eigenvector(G("2I")));
  const auto v = common_eigenvector(G("C:6"));
  REQUIRE(v.has_value());
  CHECK_FALSE(common_eigenvector(G("D:3")).has_value());
}

TEST_CASE("index two subgroups") {
  CHECK(index_two_subgroups(G("2T")).empty());
  const auto o = index_two_subgroups(G("2O"));
  REQUIRE(o.size() == 1);
  CHECK(o[0].order() == 24);
  CHECK(index_two_subgroups(o[0]).empty());
  CHECK(pgl_projection_order(o[0]) == 12);
  const auto d3 = index_two_subgroups(G("D:3"));
  CHECK(d3.size() == 1);
  CHECK(std::any_of(d3.begin(), d3.end(), [](const MatrixGroup& h) { return h.order() == 6 && is_cyclic(h); }));
  CHECK(index_two_subgroups(G("2I")).empty());
  // Binary dihedral of even N has three index-two subgroups.
  CHECK(index_two_subgroups(G("D:4")).size() == 3);
}

TEST_CASE("projection to PGL(2) and cyclicity") {
  CHECK(pgl_projection_order(G("2T")) == 12);
  CHECK(pgl_projection_order(G("2O")) == 24);
  CHECK(pgl_projection_order(G("2I")) == 60);
  CHECK(pgl_projection_order(G("C:2")) == 1);
  CHECK(pgl_projection_order(G("C:3")) == 3);
  CHECK(is_cyclic(G("C:7")));
  CHECK_FALSE(is_cyclic(G("D:4")));
  CHECK_FALSE(is_cyclic(G("2T")));
}

TEST_CASE("property: catalog invariants") {
  std::vector<std::string> tags{"2T", "2O", "2I"};
  for (int n = 1; n <= 12; ++n) tags.push_back("C:" + std::to_string(n));
  for (int n = 2; n <= 10; ++n) tags.push_back("D:" + std::to_string(n));
  for (const auto& tag : tags) {
    CAPTURE(tag);
    const GroupSpec spec = GroupSpec::parse(tag);
    const MatrixGroup g = binary_group(spec);
    const std::size_t expected = spec.kind == GroupKind::cyclic     ? spec.n
                                 : spec.kind == GroupKind::dihedral ? 4 * spec.n
                                 : spec.kind == GroupKind::tetrahedral ? 24
                                 : spec.kind == GroupKind::octahedral  ? 48
                                                                       : 120;
    CHECK(g.order() == expected);
    const CycloNumber one = CycloNumber::constant(g.field(), 1);
    CHECK(g.contains(Mat2::identity(g.field())));
    bool closed = true;
    for (const auto& x : g.elements()) {
      closed = closed && x.det() == one && g.contains(x.inverse());
      for (const auto& gen : g.generators()) closed = closed && g.contains(x * gen);
    }
    CHECK(closed);
    CHECK(has_common_eigenvector(g) == is_abelian(g));
    if (has_common_eigenvector(g)) CHECK(is_cyclic(g));
    if (spec.kind != GroupKind::cyclic) CHECK(g.contains(Mat2::scalar(-one)));
  }
}
