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


#include "lvf/cyclotomic.hpp"

#include <cmath>
#include <numbers>

#include "lvf/upoly.hpp"

namespace lvf {

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw MathError("cyclotomic polynomial of order 0");
  // x^m - 1 = prod_{d | m} Phi_d.
  std::vector<Rational> c(m + 1);
  c[0] = -1;
  c[m] = 1;
  UPoly p{std::vector<Rational>(c)};
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    std::vector<Rational> pd;
    for (const auto& z : cyclotomic_polynomial(d)) pd.emplace_back(z);
    p = divmod(p, UPoly(std::move(pd))).first;
  }
  std::vector<Integer> out;
  for (const auto& r : p.coeffs()) out.push_back(r.get_num());
  return out;
}

CycloField::CycloField(unsigned m) : m_(m), phi_(cyclotomic_polynomial(m)) {}

std::complex<double> to_complex(const CycloNumber& a) {
  const double m = a.field()->conductor();
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m;
    sum += a.coeffs()[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

}  // namespace lvf
