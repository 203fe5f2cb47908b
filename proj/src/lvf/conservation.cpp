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


#include "lvf/conservation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lvf/upoly.hpp"

namespace lvf {

namespace {

// q(x) as two double-precision polynomials, evaluated by Horner.
class DoublePotential {
 public:
  explicit DoublePotential(const RationalFunction& q) {
    if (!q.is_univariate_x()) throw std::invalid_argument("potential must depend on x alone");
    const UPoly num = UPoly::from_polynomial(q.num());
    const UPoly den = UPoly::from_polynomial(q.den());
    for (const auto& c : num.coeffs()) num_.push_back(c.get_d());
    for (const auto& c : den.coeffs()) den_.push_back(c.get_d());
  }
  double operator()(double x) const { return horner(num_, x) / horner(den_, x); }

 private:
  static double horner(const std::vector<double>& c, double x) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  std::vector<double> num_;
  std::vector<double> den_;
};

State3 rhs(const DoublePotential& q, const State3& s) { return {1.0, q(s[0]) * s[2] - 1.0, -s[1]}; }

State3 axpy(const State3& s, double h, const State3& k) { return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2]}; }

State3 rk4_step(const DoublePotential& q, const State3& s, double h) {
  const State3 k1 = rhs(q, s);
  const State3 k2 = rhs(q, axpy(s, h / 2, k1));
  const State3 k3 = rhs(q, axpy(s, h / 2, k2));
  const State3 k4 = rhs(q, axpy(s, h, k3));
  State3 out;
  for (int i = 0; i < 3; ++i) out[i] = s[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

// Tail heuristic: min |c_n|^(-1/n) over the last quarter of the known terms.
double radius_estimate(const ExactSeries& f) {
  const int N = f.order();
  double r = INFINITY;
  for (int n = std::max(1, 3 * N / 4); n <= N; ++n) {
    const double c = std::fabs(f.coeff(n).get_d());
    if (c > 0) r = std::min(r, std::pow(c, -1.0 / n));
  }
  return r;
}

}  // namespace

Rational rationalize(double v, long max_den) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot rationalize a non-finite value");
  // Convergents p/q of the continued fraction of v.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = v;
  for (int i = 0; i < 64; ++i) {
    const double a = std::floor(r);
    const Integer ai(a);
    const Integer p2 = ai * p1 + p0;
    const Integer q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (r - a < 1e-12) break;
    r = 1 / (r - a);
  }
  Rational out(p1, q1);
  out.canonicalize();
  return out;
}

std::vector<State3> integrate_system(const RationalFunction& q, const State3& start, double t_end, double dt) {
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  if (!(t_end >= 0)) throw std::invalid_argument("t_end must be non-negative");
  const DoublePotential qd(q);
  std::vector<State3> out{start};
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  State3 s = start;
  for (std::size_t i = 0; i < steps; ++i) {
    const double h = std::min(dt, t_end - static_cast<double>(i) * dt);
    s = rk4_step(qd, s, h);
    out.push_back(s);
  }
  return out;
}

ConservedQuantity::ConservedQuantity(const RationalFunction& q, const Rational& x0, int N)
    : f_(ode_series_solution(q, x0, 1, 0, N)),
      fp_(f_.derivative()),
      F_(f_.antiderivative()),
      x0_(x0.get_d()),
      window_(0.8 * radius_estimate(f_)) {}

double ConservedQuantity::operator()(const State3& s) const {
  const double h = s[0] - x0_;
  if (!(std::fabs(h) < window_)) throw MathError("trajectory leaves the series convergence window");
  return s[1] * f_.evaluate(h) + s[2] * fp_.evaluate(h) + F_.evaluate(h);
}

ConservationResult numeric_conservation_check(const RationalFunction& q, const State3& start, double t_end, double dt,
                                              int N) {
  const ConservedQuantity xi(q, rationalize(start[0]), N);
  ConservationResult res;
  res.window = xi.window();
  const std::vector<State3> states = integrate_system(q, start, t_end, dt);
  res.xi0 = xi(states.front());
  for (const auto& s : states) res.max_drift = std::max(res.max_drift, std::fabs(xi(s) - res.xi0));
  res.final_state = states.back();
  res.steps = states.size() - 1;
  return res;
}

ConservationResult numeric_conservation_check(const TriangleParameters& params, const State3& start, double t_end,
                                              double dt, int N) {
  return numeric_conservation_check(platonic_q(params), start, t_end, dt, N);
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("slope fit needs two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceStudy conservation_convergence(const TriangleParameters& params, const State3& start, double t_end,
                                          const std::vector<double>& dts, int N, double dt_ref) {
  const RationalFunction q = platonic_q(params);
  const ConservedQuantity xi(q, rationalize(start[0]), N);
  const std::vector<State3> ref = integrate_system(q, start, t_end, dt_ref);
  ConvergenceStudy out;
  for (double dt : dts) {
    const double ratio = dt / dt_ref;
    const auto stride = static_cast<std::size_t>(std::llround(ratio));
    if (stride == 0 || std::fabs(ratio - static_cast<double>(stride)) > 1e-6 * ratio) {
      throw std::invalid_argument("step sizes must be integer multiples of the reference step");
    }
    const ConservationResult r = numeric_conservation_check(q, start, t_end, dt, N);
    const std::vector<State3> run = integrate_system(q, start, t_end, dt);
    double err = 0;
    for (int i = 0; i < 3; ++i) err = std::max(err, std::fabs(run.back()[i] - ref.back()[i]));
    double xi_err = 0;
    for (std::size_t k = 0; k < run.size(); ++k) {
      const State3& other = k + 1 == run.size() ? ref.back() : ref[std::min(k * stride, ref.size() - 1)];
      xi_err = std::max(xi_err, std::fabs(xi(run[k]) - xi(other)));
    }
    out.dts.push_back(dt);
    out.drift.push_back(r.max_drift);
    out.error.push_back(err);
    out.xi_error.push_back(xi_err);
  }
  out.drift_slope = loglog_slope(out.dts, out.drift);
  out.error_slope = loglog_slope(out.dts, out.error);
  out.xi_error_slope = loglog_slope(out.dts, out.xi_error);
  return out;
}

}  // namespace lvf
