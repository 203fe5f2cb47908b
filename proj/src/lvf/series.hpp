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


#ifndef LVF_SERIES_HPP
#define LVF_SERIES_HPP

#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lvf/rational_function.hpp"

namespace lvf {

/// Truncated Taylor series sum c_n (x - x0)^n known exactly through order N.
///
/// order() == kExact marks a polynomial (all coefficients known); order() ==
/// -1 means no coefficient is known. Arithmetic keeps the smallest order of
/// its operands, so identities checked on the result hold through that order.
class ExactSeries {
 public:
  static constexpr int kExact = INT_MAX;

  ExactSeries() = default;
  /// Coefficients past `order` are dropped.
  ExactSeries(Rational base, std::vector<Rational> coeffs, int order);

  static ExactSeries constant(const Rational& base, const Rational& c) { return {base, {c}, kExact}; }
  /// The coordinate x itself, x0 + (x - x0).
  static ExactSeries identity(const Rational& base) { return {base, {base, 1}, kExact}; }

  [[nodiscard]] const Rational& base_point() const { return base_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] bool is_exact() const { return order_ == kExact; }
  /// Stored coefficients; entries past the end are zero when exact.
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  /// Throws std::out_of_range beyond the known order.
  [[nodiscard]] Rational coeff(int n) const;
  /// True when every known coefficient vanishes.
  [[nodiscard]] bool is_zero() const;

  ExactSeries operator-() const;
  friend ExactSeries operator+(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator-(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator*(const Rational& k, const ExactSeries& a);
  /// Throws MathError when b has zero constant term.
  friend ExactSeries operator/(const ExactSeries& a, const ExactSeries& b);
  /// Compares known coefficients through the common order.
  friend bool operator==(const ExactSeries& a, const ExactSeries& b) { return (a - b).is_zero(); }

  [[nodiscard]] ExactSeries derivative() const;
  /// Term-by-term antiderivative with constant term 0.
  [[nodiscard]] ExactSeries antiderivative() const;
  /// Square root with constant term root0; throws MathError unless
  /// root0^2 equals the nonzero constant term.
  [[nodiscard]] ExactSeries sqrt(const Rational& root0) const;
  [[nodiscard]] ExactSeries truncated(int order) const;

  /// Sum of the known terms at x = x0 + h, in double precision.
  [[nodiscard]] double evaluate(double h) const;
  /// Known nonzero terms plus "O((x - x0)^(N+1))"; with max_terms >= 0 only
  /// the first max_terms nonzero terms are printed, followed by "...".
  [[nodiscard]] std::string to_string(int max_terms = -1) const;

 private:
  void trim();
  Rational base_;
  std::vector<Rational> c_;
  int order_ = kExact;
};

/// Taylor expansion of a rational function of x at x0 through `order`.
/// Throws MathError when x0 is a pole and std::invalid_argument when f
/// involves y or z.
ExactSeries expand(const RationalFunction& f, const Rational& x0, int order);

/// Unique truncated solution of f'' + q f = 0 with f(x0) = f0, f'(x0) = f1,
/// known through order N. Throws MathError when x0 is a pole of q.
ExactSeries ode_series_solution(const RationalFunction& q, const Rational& x0, const Rational& f0,
                                const Rational& f1, int N);

struct SolutionPair {
  ExactSeries f;
  ExactSeries g;
  bool normalized = false;
};

/// f g' - g f'.
ExactSeries wronskian(const SolutionPair& pair);
/// Scales g by the inverse of the Wronskian's constant term, which makes the
/// Wronskian exactly 1 for a solution pair. Throws MathError if it vanishes.
SolutionPair normalize(SolutionPair pair);
/// Solutions with initial data (1, 0) and (0, 1).
SolutionPair fundamental_pair(const RationalFunction& q, const Rational& x0, int N);

/// Polynomial in y and z with ExactSeries coefficients, all at one base point.
class SeriesPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;  // exponents of y and z

  explicit SeriesPoly(Rational base = 0) : base_(std::move(base)) {}
  SeriesPoly(const ExactSeries& s)  // NOLINT: coefficient embedding
      : base_(s.base_point()) { add_term({0, 0}, s); }
  SeriesPoly(Rational base, long c) : base_(std::move(base)) { add_term({0, 0}, ExactSeries::constant(base_, c)); }

  static SeriesPoly y(const Rational& base) { return monomial(base, {1, 0}); }
  static SeriesPoly z(const Rational& base) { return monomial(base, {0, 1}); }

  [[nodiscard]] const Rational& base_point() const { return base_; }
  [[nodiscard]] const std::map<Key, ExactSeries>& terms() const { return t_; }
  /// Coefficient of y^i z^j (exact zero if absent).
  [[nodiscard]] ExactSeries coeff(unsigned i, unsigned j) const;
  [[nodiscard]] int order() const;
  [[nodiscard]] bool is_zero() const;

  SeriesPoly operator-() const;
  friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) { return (a - b).is_zero(); }

  [[nodiscard]] SeriesPoly derivative(Var v) const;
  [[nodiscard]] std::string to_string() const;

 private:
  static SeriesPoly monomial(const Rational& base, Key k) {
    SeriesPoly p(base);
    p.add_term(k, ExactSeries::constant(base, 1));
    return p;
  }
  void add_term(Key k, const ExactSeries& s);
  Rational base_;
  std::map<Key, ExactSeries> t_;
};

inline SeriesPoly partial(const SeriesPoly& f, Var v) { return f.derivative(v); }
inline SeriesPoly zero_like(const SeriesPoly& f) { return SeriesPoly(f.base_point()); }
inline SeriesPoly one_like(const SeriesPoly& f) { return {f.base_point(), 1}; }
inline bool is_zero(const SeriesPoly& f) { return f.is_zero(); }
inline std::string to_string(const SeriesPoly& f) { return f.to_string(); }

}  // namespace lvf

#endif  // LVF_SERIES_HPP
