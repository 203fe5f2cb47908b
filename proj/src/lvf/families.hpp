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


#ifndef LVF_FAMILIES_HPP
#define LVF_FAMILIES_HPP

#include <string>

#include "lvf/descent.hpp"
#include "lvf/forms.hpp"
#include "lvf/radical.hpp"

namespace lvf {

enum class GroupTag { tetrahedral, octahedral, icosahedral, dihedral };

std::string_view group_tag_name(GroupTag tag);

/// Local exponent data (m, n, p) of the potential; (m, n, p) is kept in the
/// order given, never sorted.
struct TriangleParameters {
  unsigned m = 2;
  unsigned n = 2;
  unsigned p = 3;
  GroupTag tag = GroupTag::dihedral;

  /// Classifies (m, n, p) as a permutation of (2,3,3), (2,3,4), (2,3,5) or
  /// (2,2,N) with N >= 3; throws std::invalid_argument otherwise.
  static TriangleParameters from_triple(unsigned m, unsigned n, unsigned p);
  /// "233", "234", "235", "22N:<N>", or any three-digit permutation such as
  /// "322". Throws std::invalid_argument for anything else.
  static TriangleParameters from_tag(const std::string& tag);

  [[nodiscard]] std::string to_string() const;
};

/// 1/4 (A/x^2 + B/(x(x-1)) + C/(x-1)^2) with A = 1 - 1/m^2, C = 1 - 1/n^2,
/// A + B + C = 1 - 1/p^2.
RationalFunction platonic_q(const TriangleParameters& params);

/// x' = 1, y' = q z - 1, z' = -y and its 2-form.
struct ExceptionalSystem {
  TriangleParameters params;
  RationalFunction q;
  VectorField3 field;
  TwoForm<RationalFunction> Omega;
};

ExceptionalSystem build_system(const TriangleParameters& params);
/// Same shape with an arbitrary potential (used for perturbed controls).
ExceptionalSystem build_system(const TriangleParameters& params, const RationalFunction& q);

/// The explicit (2,2,3) example over K(sqrt(k)), k = x(x-1).
struct D3ExampleBundle {
  ExceptionalSystem system;
  RationalFunction k;
  RadicalContextPtr ctx;
  RadicalFunction h1;
  RadicalFunction h2;
  OneForm<RadicalFunction> omega1;
  OneForm<RadicalFunction> omega2;
  OneForm<RadicalFunction> alpha1;
  OneForm<RadicalFunction> alpha2;
  TwoForm<RadicalFunction> Omega;
};

/// Builds the bundle and checks both integrability triples exactly; throws
/// std::logic_error if either fails.
D3ExampleBundle d3_bundle();

/// (1 - q z + y h) dx + dy + h dz.
OneForm<RadicalFunction> omega_from_riccati(const RadicalFunction& h, const RationalFunction& q);

}  // namespace lvf

#endif  // LVF_FAMILIES_HPP
