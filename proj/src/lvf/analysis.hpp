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


#ifndef LVF_ANALYSIS_HPP
#define LVF_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lvf/forms.hpp"
#include "lvf/upoly.hpp"

namespace lvf {

struct IndicialResult {
  /// nullopt stands for the point at infinity.
  std::optional<Rational> point;
  /// Coefficient c of (x - point)^-2 in q.
  Rational coefficient;
  /// Roots of r(r - 1) + c = 0 in increasing order, when rational.
  std::optional<std::pair<Rational, Rational>> roots;
  bool has_integer_root = false;

  [[nodiscard]] std::string to_string() const;
};

/// Throws MathError when q has a pole of order > 2 at the point and
/// std::invalid_argument when q involves y or z.
IndicialResult indicial_roots(const RationalFunction& q, const Rational& point);

/// The same equation at infinity, with c = lim x^2 q(x); requires
/// q = O(1/x^2) and throws MathError otherwise.
IndicialResult indicial_roots_at_infinity(const RationalFunction& q);

struct InhomogeneousResult {
  enum class Status { witness, no_solution_certificate, no_solution_bounded };
  Status status = Status::no_solution_bounded;
  /// Set for Status::witness; satisfies xi'' + q xi = 1 exactly.
  std::optional<RationalFunction> xi;
  /// Human-readable reason, stable across runs.
  std::string explanation;
};

/// Decides whether xi'' + q xi = 1 has a rational solution, for q whose only
/// poles are x = 0 and x = 1 of order <= 2.
///
/// A solution can only have poles at 0 and 1. Its orders r0, r1 there must be
/// 2 or an integer indicial root below 2, and its degree d at infinity must be
/// 2 or an integer indicial root above 2 (when q = O(1/x^2)). Since
/// xi / (x^r0 (x - 1)^r1) is a polynomial, d >= r0 + r1. When no admissible
/// triple exists this is reported as a certificate; otherwise the ansatz
/// P / (x^a (x - 1)^b) is solved as a linear system with deg P <= degree_bound.
/// Throws MathError for q outside that shape.
InhomogeneousResult rational_inhomogeneous_solution(const RationalFunction& q, int degree_bound = 20);

/// Brute-force search with xi = P / (x^a (x - 1)^a), a = max_pole_order and
/// deg P <= degree_bound, ignoring the indicial analysis.
std::optional<RationalFunction> search_rational_solution(const RationalFunction& q, int max_pole_order,
                                                         int degree_bound);

struct LogDerivativeWitness {
  /// Monic irreducible factors with nonzero integer exponents.
  std::vector<std::pair<UPoly, long>> factors;

  /// Product of p^e, as a rational function of x.
  [[nodiscard]] RationalFunction product() const;
  [[nodiscard]] std::string to_string() const;
};

struct LogDerivativeResult {
  std::optional<LogDerivativeWitness> witness;
  /// Reason for a refusal, empty on success.
  std::string reason;
};

/// Decides whether R(x) dx = d(l)/l for a rational l. Throws
/// std::invalid_argument when the form has dy or dz parts or depends on y or z.
LogDerivativeResult is_log_derivative(const OneForm<RationalFunction>& eta);

/// Groups i and j when alpha_i - alpha_j is a logarithmic derivative.
/// Blocks are ordered by their smallest index.
std::vector<std::vector<std::size_t>> block_partition(const std::vector<OneForm<RationalFunction>>& alphas);

}  // namespace lvf

#endif  // LVF_ANALYSIS_HPP
