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


#ifndef LVF_CONSERVATION_HPP
#define LVF_CONSERVATION_HPP

#include <array>
#include <vector>

#include "lvf/families.hpp"
#include "lvf/series.hpp"

namespace lvf {

using State3 = std::array<double, 3>;

struct ConservationResult {
  double max_drift = 0;
  double xi0 = 0;
  State3 final_state{};
  std::size_t steps = 0;
  /// 0.8 times the estimated convergence radius of the series of f.
  double window = 0;
};

/// Xi = y f(x) + z f'(x) + F(x) for the series solution f with f(x0) = 1,
/// f'(x0) = 0 and F(x0) = 0, evaluated in double precision.
class ConservedQuantity {
 public:
  ConservedQuantity(const RationalFunction& q, const Rational& x0, int N);
  /// Throws MathError outside the convergence window.
  double operator()(const State3& s) const;
  /// 0.8 times min |c_n|^(-1/n) over the last quarter of f's coefficients.
  [[nodiscard]] double window() const { return window_; }

 private:
  ExactSeries f_, fp_, F_;
  double x0_;
  double window_;
};

/// Continued-fraction approximation with denominator at most max_den.
Rational rationalize(double v, long max_den = 1000000);

/// Integrates x' = 1, y' = q z - 1, z' = -y with fixed-step classical RK4
/// (the last step is shortened to land on t_end) and tracks Xi around
/// x0 = rationalize(start[0]). Throws MathError when x leaves the
/// convergence window and std::invalid_argument for dt <= 0 or t_end < 0.
ConservationResult numeric_conservation_check(const RationalFunction& q, const State3& start, double t_end, double dt,
                                              int N);
ConservationResult numeric_conservation_check(const TriangleParameters& params, const State3& start, double t_end,
                                              double dt, int N);

/// RK4 states at every step, including the start.
std::vector<State3> integrate_system(const RationalFunction& q, const State3& start, double t_end, double dt);

/// Least-squares slope of log(ys) against log(xs).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

struct ConvergenceStudy {
  std::vector<double> dts;
  std::vector<double> drift;
  /// Max-norm distance of the final state from a run with dt_ref.
  std::vector<double> error;
  /// Max over the coarse grid of |Xi(run) - Xi(reference)|. The series
  /// truncation error of Xi is common to both runs and cancels.
  std::vector<double> xi_error;
  double drift_slope = 0;
  double error_slope = 0;
  double xi_error_slope = 0;
};

ConvergenceStudy conservation_convergence(const TriangleParameters& params, const State3& start, double t_end,
                                          const std::vector<double>& dts, int N, double dt_ref = 1e-5);

}  // namespace lvf

#endif  // LVF_CONSERVATION_HPP
