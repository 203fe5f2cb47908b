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


#include "lvf/descent.hpp"

namespace lvf {

OneForm<RadicalFunction> embed_form(const RadicalContextPtr& ctx, const OneForm<RationalFunction>& a) {
  return map_form(a, [&](const RationalFunction& f) { return radical_embed(ctx, f); });
}

TwoForm<RadicalFunction> embed_form(const RadicalContextPtr& ctx, const TwoForm<RationalFunction>& a) {
  return map_form(a, [&](const RationalFunction& f) { return radical_embed(ctx, f); });
}

OneForm<RadicalFunction> conjugate(const OneForm<RadicalFunction>& a, unsigned j) {
  return map_form(a, [&](const RadicalFunction& f) { return conjugate(f, j); });
}

OneForm<RationalFunction> galois_average(const OneForm<RadicalFunction>& a) {
  return map_form(a, [](const RadicalFunction& f) { return galois_average(f); });
}

OneForm<RationalFunction> galois_average(const std::vector<OneForm<RadicalFunction>>& orbit) {
  if (orbit.empty()) throw MathError("average of an empty list of forms");
  OneForm<RadicalFunction> sum = orbit.front();
  for (std::size_t i = 1; i < orbit.size(); ++i) sum = sum + orbit[i];
  const RationalFunction inv(Rational(1, static_cast<long>(orbit.size())));
  return map_form(sum, [&](const RadicalFunction& f) {
    if (!f.in_base()) throw MathError("average of forms is not in the base field");
    return f.coeff(0) * inv;
  });
}

namespace {

RationalFunction base_part(const RadicalFunction& f) {
  if (!f.in_base()) throw MathError("alpha must have base-field coefficients");
  return f.coeff(0);
}

}  // namespace

std::vector<DescentPiece> cyclic_descend(const OneForm<RadicalFunction>& omega,
                                         const OneForm<RadicalFunction>& alpha) {
  const OneForm<RationalFunction> base_alpha = map_form(alpha, base_part);
  return cyclic_descend(omega, base_alpha, omega.x.context());
}

std::vector<DescentPiece> cyclic_descend(const OneForm<RadicalFunction>& omega,
                                         const OneForm<RationalFunction>& alpha, const RadicalContextPtr& ctx) {
  if (omega.is_zero()) throw MathError("cyclic_descend needs omega != 0");
  const OneForm<RadicalFunction> a = embed_form(ctx, alpha);
  const TwoForm<RadicalFunction> residual = d(omega) - wedge(a, omega);
  if (!residual.is_zero()) throw MathError("precondition d(omega) = alpha ^ omega fails: " + to_string(residual));

  const unsigned m = ctx->m();
  const OneForm<RationalFunction> dlog{ctx->log_derivative(Var::x), ctx->log_derivative(Var::y),
                                       ctx->log_derivative(Var::z)};
  std::vector<DescentPiece> out;
  for (unsigned i = 0; i < m; ++i) {
    DescentPiece piece{i, {omega.x.coeff(i), omega.y.coeff(i), omega.z.coeff(i)}, {}};
    if (piece.eta.is_zero()) continue;
    // dlog already carries the 1/m, so alpha_i = alpha - i dlog.
    piece.alpha = alpha - RationalFunction(static_cast<long>(i)) * dlog;
    const TwoForm<RationalFunction> r = d(piece.eta) - wedge(piece.alpha, piece.eta);
    if (!r.is_zero()) throw MathError("descended piece fails its integrability relation: " + to_string(r));
    out.push_back(std::move(piece));
  }
  if (out.empty()) throw MathError("all descended pieces vanish");
  return out;
}

OneForm<RadicalFunction> reassemble(const RadicalContextPtr& ctx, const std::vector<DescentPiece>& pieces) {
  const RadicalFunction zero = radical_embed(ctx, {});
  OneForm<RadicalFunction> sum{zero, zero, zero};
  const RadicalFunction t = radical_generator(ctx);
  for (const auto& p : pieces) {
    RadicalFunction ti = radical_embed(ctx, 1);
    for (unsigned k = 0; k < p.index; ++k) ti = ti * t;
    sum = sum + ti * embed_form(ctx, p.eta);
  }
  return sum;
}

}  // namespace lvf
