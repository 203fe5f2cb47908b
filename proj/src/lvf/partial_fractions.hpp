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

#ifndef LVF_PARTIAL_FRACTIONS_HPP
#define LVF_PARTIAL_FRACTIONS_HPP

#include <vector>

#include "lvf/rational_function.hpp"
#include "lvf/upoly.hpp"

namespace lvf {

/// coefficient / root^order with deg(coefficient) < deg(root).
struct PoleTerm {
  UPoly root;  // monic irreducible
  unsigned order = 0;
  UPoly coefficient;
};

struct PartialFractionDecomposition {
  UPoly polynomial_part;
  /// Sorted by root (degree, then coefficients), then by descending order.
  std::vector<PoleTerm> pole_terms;

  [[nodiscard]] RationalFunction reassemble() const;
  /// Term for (root, order), or nullptr.
  [[nodiscard]] const PoleTerm* find(const UPoly& root, unsigned order) const;
};

/// Throws MathError when f depends on y or z.
PartialFractionDecomposition partial_fractions(const RationalFunction& f);

}  // namespace lvf

#endif  // LVF_PARTIAL_FRACTIONS_HPP
