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

#include "lvf/partial_fractions.hpp"

namespace lvf {

RationalFunction PartialFractionDecomposition::reassemble() const {
  RationalFunction sum(polynomial_part.to_polynomial());
  for (const auto& t : pole_terms) {
    sum += RationalFunction(t.coefficient.to_polynomial(),
                            pow(t.root, t.order).to_polynomial());
  }
  return sum;
}

const PoleTerm* PartialFractionDecomposition::find(const UPoly& root, unsigned order) const {
  for (const auto& t : pole_terms) {
    if (t.order == order && t.root == root) return &t;
  }
  return nullptr;
}

PartialFractionDecomposition partial_fractions(const RationalFunction& f) {
  if (!f.is_univariate_x()) {
    throw MathError("partial fractions need a function of x alone: " + f.to_string());
  }
  const UPoly num = UPoly::from_polynomial(f.num());
  const UPoly den = UPoly::from_polynomial(f.den());
  auto [quot, rem] = divmod(num, den);

  PartialFractionDecomposition out;
  out.polynomial_part = quot;
  if (rem.is_zero()) return out;

  // rem/den = sum_i A_i / p_i^{e_i} with A_i = rem * (den / p_i^{e_i})^{-1}
  // mod p_i^{e_i}; each A_i is then expanded p_i-adically.
  const Rational inv_lc = 1 / den.lc();
  const UPoly monic_rem = rem * UPoly(inv_lc);
  const UPoly monic_den = den.monic();
  for (const auto& [p, e] : factor(monic_den)) {
    const UPoly pe = pow(p, e);
    const UPoly cofactor = divmod(monic_den, pe).first;
    UPoly a = divmod(monic_rem * inverse_mod(cofactor, pe), pe).second;
    for (unsigned j = 0; j < e && !a.is_zero(); ++j) {
      auto [q, c] = divmod(a, p);
      if (!c.is_zero()) out.pole_terms.push_back(PoleTerm{p, e - j, c});
      a = std::move(q);
    }
  }
  return out;
}

}  // namespace lvf
