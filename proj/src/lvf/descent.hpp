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


#ifndef LVF_DESCENT_HPP
#define LVF_DESCENT_HPP

#include <vector>

#include "lvf/forms.hpp"
#include "lvf/radical.hpp"

namespace lvf {

OneForm<RadicalFunction> embed_form(const RadicalContextPtr& ctx, const OneForm<RationalFunction>& a);
TwoForm<RadicalFunction> embed_form(const RadicalContextPtr& ctx, const TwoForm<RationalFunction>& a);

/// Conjugates every coefficient (t -> -t); m = 2 only, see conjugate().
OneForm<RadicalFunction> conjugate(const OneForm<RadicalFunction>& a, unsigned j);

/// Coefficientwise Galois average, returned over the base field.
OneForm<RationalFunction> galois_average(const OneForm<RadicalFunction>& a);

/// Arithmetic mean of the given forms; throws MathError unless the mean has
/// base-field coefficients (true when the list is a full Galois orbit).
OneForm<RationalFunction> galois_average(const std::vector<OneForm<RadicalFunction>>& orbit);

/// Component of the t^index slice of omega = sum eta_i t^i.
struct DescentPiece {
  unsigned index = 0;
  OneForm<RationalFunction> eta;
  OneForm<RationalFunction> alpha;  // alpha - (index / m) dg / g
};

/// Splits omega over K(t) into base-field pieces eta_i, each satisfying
/// d eta_i = alpha_i ^ eta_i. Requires d omega = alpha ^ omega with alpha in
/// the base field; throws MathError when that fails or omega = 0. Every
/// returned pair is verified before return.
std::vector<DescentPiece> cyclic_descend(const OneForm<RadicalFunction>& omega,
                                         const OneForm<RadicalFunction>& alpha);
std::vector<DescentPiece> cyclic_descend(const OneForm<RadicalFunction>& omega,
                                         const OneForm<RationalFunction>& alpha, const RadicalContextPtr& ctx);

/// sum eta_i t^i.
OneForm<RadicalFunction> reassemble(const RadicalContextPtr& ctx, const std::vector<DescentPiece>& pieces);

}  // namespace lvf

#endif  // LVF_DESCENT_HPP
