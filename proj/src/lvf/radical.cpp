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


#include "lvf/radical.hpp"

namespace lvf {

RadicalContext::RadicalContext(unsigned m, RationalFunction g) : m_(m), g_(std::move(g)) {
  if (m_ < 2) throw MathError("radical extension needs m >= 2");
  if (g_.is_zero()) throw MathError("radical extension needs g != 0");
  const RationalFunction mg = g_ * RationalFunction(static_cast<long>(m_));
  for (Var v : kAllVars) dlog_[static_cast<std::size_t>(v)] = g_.derivative(v) / mg;
  cyclo_ = make_cyclo_field(m_);
  for (unsigned j = 0; j < m_; ++j) zeta_.push_back(CycloNumber::zeta(cyclo_, j));
}

RadicalFunction radical_generator(const RadicalContextPtr& ctx) {
  std::vector<RationalFunction> a(ctx->m());
  a[1] = 1;
  return RadicalFunction(ctx, std::move(a));
}

RadicalFunction radical_embed(const RadicalContextPtr& ctx, const RationalFunction& f) {
  return RadicalFunction::embed(ctx, f);
}

RadicalFunction conjugate(const RadicalFunction& e, unsigned j) {
  const unsigned m = e.m();
  if (j >= m) throw MathError("conjugation index out of range");
  if (j == 0) return e;
  if (m != 2) throw MathError("conjugation for m > 2 needs cyclotomic coefficients; promote first");
  return RadicalFunction(e.context(), {e.coeff(0), -e.coeff(1)});
}

RadicalCycloFunction conjugate(const RadicalCycloFunction& e, unsigned j) {
  const unsigned m = e.m();
  if (j >= m) throw MathError("conjugation index out of range");
  const auto& ctx = e.context();
  std::vector<CycloFunction> out;
  out.reserve(m);
  for (unsigned i = 0; i < m; ++i) {
    const CycloNumber& z = ctx->zeta_powers()[(static_cast<unsigned long>(i) * j) % m];
    std::vector<RationalFunction> zc(z.coeffs().begin(), z.coeffs().end());
    out.push_back(e.coeff(i) * CycloFunction(ctx->cyclo(), std::move(zc)));
  }
  return RadicalCycloFunction(ctx, std::move(out));
}

RadicalCycloFunction promote(const RadicalFunction& e) {
  std::vector<CycloFunction> out;
  out.reserve(e.m());
  for (const auto& c : e.coeffs()) out.push_back(CycloFunction::constant(e.context()->cyclo(), c));
  return RadicalCycloFunction(e.context(), std::move(out));
}

RationalFunction galois_average(const RadicalFunction& e) {
  const unsigned m = e.m();
  const RationalFunction inv_m(Rational(1, m));
  if (m == 2) {
    const RadicalFunction s = e + conjugate(e, 1);
    if (!s.in_base()) throw MathError("Galois average left the base field");
    return s.coeff(0) * inv_m;
  }
  const RadicalCycloFunction p = promote(e);
  RadicalCycloFunction s = p;
  for (unsigned j = 1; j < m; ++j) s += conjugate(p, j);
  if (!s.in_base() || !s.coeff(0).in_base()) throw MathError("Galois average left the base field");
  return s.coeff(0).base_part() * inv_m;
}

}  // namespace lvf
