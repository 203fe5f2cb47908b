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


#ifndef LVF_SERIES_VERIFY_HPP
#define LVF_SERIES_VERIFY_HPP

#include "lvf/families.hpp"
#include "lvf/forms.hpp"
#include "lvf/series.hpp"

namespace lvf {

using SeriesForm = OneForm<SeriesPoly>;

/// (f + y f' - q z f) dx + f dy + f' dz. Throws std::invalid_argument when
/// f_prime is not the derivative of f and MathError when f'' + q f does not
/// vanish through the truncation order.
SeriesForm omega_from_solution(const ExactSeries& f, const ExactSeries& f_prime, const RationalFunction& q);

/// Omega of the system with potential q, expanded at x0 through order N.
TwoForm<SeriesPoly> series_system_form(const RationalFunction& q, const Rational& x0, int N);

/// Wronskian, closedness, Omega-compatibility and omega1^omega2 = Omega for
/// solutions of f'' + q_solution f = 0 tested against the system built from
/// q_system. Passing the same potential twice is the normal use.
VerificationReport verify_series_identities(const RationalFunction& q_solution, const RationalFunction& q_system,
                                            const Rational& x0, int N);

/// Throws std::invalid_argument unless x0 is not 0 or 1 and N >= 8.
VerificationReport verify_family_series(const TriangleParameters& params, const Rational& x0, int N);

/// Expansion of a0 + a1 t (t^2 = g) at x0 on the sheet where t(x0) = root0.
/// Coefficients must be functions of x; throws MathError when root0^2 is not
/// g(x0).
ExactSeries expand_quadratic_radical(const RadicalFunction& e, const Rational& x0, int N, const Rational& root0);

/// Compares f'/f for the ODE solution seeded with f(x0) = 1, f'(x0) = h(x0)
/// against the expansion of h on both sheets. Requires x0 > 1 with k(x0) a
/// rational square; throws MathError otherwise.
VerificationReport h1_consistency_check(const D3ExampleBundle& bundle, const Rational& x0, int N);

}  // namespace lvf

#endif  // LVF_SERIES_VERIFY_HPP
