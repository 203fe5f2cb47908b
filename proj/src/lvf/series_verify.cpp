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


#include "lvf/series_verify.hpp"

#include <stdexcept>

namespace lvf {

namespace {

bool zero_through(const ExactSeries& s, int order) { return s.truncated(order).is_zero(); }

}  // namespace

SeriesForm omega_from_solution(const ExactSeries& f, const ExactSeries& f_prime, const RationalFunction& q) {
  const Rational& x0 = f.base_point();
  if (!(f_prime - f.derivative()).is_zero()) throw std::invalid_argument("f_prime is not the derivative of f");
  const int n = f.order() == ExactSeries::kExact ? 40 : f.order();
  const ExactSeries Q = expand(q, x0, n);
  const ExactSeries residual = f.derivative().derivative() + Q * f;
  if (!residual.is_zero()) throw MathError("ODE residual is nonzero: " + residual.to_string(4));
  const SeriesPoly y = SeriesPoly::y(x0);
  const SeriesPoly z = SeriesPoly::z(x0);
  const SeriesPoly F(f);
  const SeriesPoly Fp(f_prime);
  return {F + y * Fp - SeriesPoly(Q) * z * F, F, Fp};
}

TwoForm<SeriesPoly> series_system_form(const RationalFunction& q, const Rational& x0, int N) {
  const SeriesPoly z = SeriesPoly::z(x0);
  return {SeriesPoly(x0, 1), SeriesPoly(expand(q, x0, N)) * z - SeriesPoly(x0, 1), -SeriesPoly::y(x0)};
}

VerificationReport verify_series_identities(const RationalFunction& q_solution, const RationalFunction& q_system,
                                            const Rational& x0, int N) {
  // Deliberately not the fundamental pair so that the Wronskian scaling is
  // exercised: W = 2 before normalization.
  const SolutionPair pair = normalize(
      {ode_series_solution(q_solution, x0, 1, 0, N), ode_series_solution(q_solution, x0, 1, 2, N), false});
  VerificationReport report;
  const ExactSeries w = wronskian(pair) - ExactSeries::constant(x0, 1);
  report.add("wronskian=1", w.is_zero(), w.to_string(4));

  const SeriesForm w1 = omega_from_solution(pair.f, pair.f.derivative(), q_solution);
  const SeriesForm w2 = omega_from_solution(pair.g, pair.g.derivative(), q_solution);
  const TwoForm<SeriesPoly> Om = series_system_form(q_system, x0, N);

  const auto a1 = wedge(w1, Om);
  const auto a2 = wedge(w2, Om);
  report.add("omega1^Omega=0", a1.is_zero(), to_string(a1));
  report.add("omega2^Omega=0", a2.is_zero(), to_string(a2));
  const auto b1 = d(w1);
  const auto b2 = d(w2);
  report.add("d(omega1)=0", b1.is_zero(), to_string(b1));
  report.add("d(omega2)=0", b2.is_zero(), to_string(b2));
  const auto c = wedge(w1, w2) - Om;
  report.add("omega1^omega2=Omega", c.is_zero(), to_string(c));
  return report;
}

VerificationReport verify_family_series(const TriangleParameters& params, const Rational& x0, int N) {
  if (x0 == 0 || x0 == 1) throw std::invalid_argument("base point must avoid the singular points 0 and 1");
  if (N < 8) throw std::invalid_argument("series order must be at least 8");
  const RationalFunction q = platonic_q(params);
  return verify_series_identities(q, q, x0, N);
}

ExactSeries expand_quadratic_radical(const RadicalFunction& e, const Rational& x0, int N, const Rational& root0) {
  if (e.m() != 2) throw std::invalid_argument("only square roots are expanded");
  const ExactSeries t = expand(e.context()->g(), x0, N).sqrt(root0);
  return expand(e.coeff(0), x0, N) + expand(e.coeff(1), x0, N) * t;
}

VerificationReport h1_consistency_check(const D3ExampleBundle& bundle, const Rational& x0, int N) {
  if (x0 <= 1) throw std::invalid_argument("base point must exceed 1");
  if (N < 8) throw std::invalid_argument("series order must be at least 8");
  const auto root = rational_sqrt(bundle.k.substitute(Var::x, x0).constant_value());
  if (!root) throw MathError("k(" + to_string(x0) + ") is not a rational square");

  VerificationReport report;
  const auto sheet = [&](const RadicalFunction& h, const Rational& r, const std::string& label) {
    const ExactSeries H = expand_quadratic_radical(h, x0, N, r);
    const ExactSeries f = ode_series_solution(bundle.system.q, x0, 1, H.coeff(0), N);
    const ExactSeries residual = (f.derivative() / f - H).truncated(N - 2);
    report.add("f'/f=" + label, residual.is_zero(), residual.to_string(4));
  };
  sheet(bundle.h1, *root, "h1");
  sheet(bundle.h2, *root, "h2");
  // h2 on one sheet is h1 on the other.
  const ExactSeries swap = expand_quadratic_radical(bundle.h1, x0, N, -*root) -
                           expand_quadratic_radical(bundle.h2, x0, N, *root);
  report.add("h1(-sheet)=h2", swap.is_zero(), swap.to_string(4));
  const ExactSeries dh = expand_quadratic_radical(bundle.h1.differentiate(Var::x), x0, N - 1, *root) -
                         expand_quadratic_radical(bundle.h1, x0, N, *root).derivative();
  report.add("d(h1)/dx", zero_through(dh, N - 1), dh.to_string(4));
  return report;
}

}  // namespace lvf
