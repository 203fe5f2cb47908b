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


#ifndef LVF_FORMS_HPP
#define LVF_FORMS_HPP

#include <concepts>
#include <string>
#include <utility>

#include "lvf/rational_function.hpp"
#include "lvf/report.hpp"

namespace lvf {

/// Minimal contract for form coefficients: ring operations, the three
/// partial derivatives, zero test, and constructors of 0 and 1 shaped like a
/// given value (radical and series coefficients carry context).
template <class T>
concept DifferentialRing = std::copy_constructible<T> && requires(const T& a, const T& b, Var v) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { partial(a, v) } -> std::convertible_to<T>;
  { zero_like(a) } -> std::convertible_to<T>;
  { one_like(a) } -> std::convertible_to<T>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <class T>
concept DifferentialField = DifferentialRing<T> && requires(const T& a, const T& b) {
  { a / b } -> std::convertible_to<T>;
};

namespace detail {

// Members named is_zero would hide the free function, so forms call this.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

}  // namespace detail

/// x dx + y dy + z dz.
template <DifferentialRing C>
struct OneForm {
  C x, y, z;

  [[nodiscard]] const C& operator[](Var v) const { return v == Var::x ? x : v == Var::y ? y : z; }
  [[nodiscard]] bool is_zero() const { return detail::coeff_is_zero(x) && detail::coeff_is_zero(y) && detail::coeff_is_zero(z); }
  friend bool operator==(const OneForm& a, const OneForm& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend OneForm operator+(const OneForm& a, const OneForm& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend OneForm operator-(const OneForm& a, const OneForm& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  OneForm operator-() const { return {-x, -y, -z}; }
  friend OneForm operator*(const C& f, const OneForm& a) { return {f * a.x, f * a.y, f * a.z}; }
};

/// p dy^dz + q dz^dx + r dx^dy.
template <DifferentialRing C>
struct TwoForm {
  C p, q, r;

  [[nodiscard]] bool is_zero() const { return detail::coeff_is_zero(p) && detail::coeff_is_zero(q) && detail::coeff_is_zero(r); }
  friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.p == b.p && a.q == b.q && a.r == b.r; }
  friend TwoForm operator+(const TwoForm& a, const TwoForm& b) { return {a.p + b.p, a.q + b.q, a.r + b.r}; }
  friend TwoForm operator-(const TwoForm& a, const TwoForm& b) { return {a.p - b.p, a.q - b.q, a.r - b.r}; }
  TwoForm operator-() const { return {-p, -q, -r}; }
  friend TwoForm operator*(const C& f, const TwoForm& a) { return {f * a.p, f * a.q, f * a.r}; }
};

/// c dx^dy^dz; dx^dy^dz is the positive orientation.
template <DifferentialRing C>
struct ThreeForm {
  C c;

  [[nodiscard]] bool is_zero() const { return detail::coeff_is_zero(c); }
  friend bool operator==(const ThreeForm& a, const ThreeForm& b) { return a.c == b.c; }
};

/// X = P d/dx + Q d/dy + R d/dz.
struct VectorField3 {
  RationalFunction P, Q, R;
};

inline TwoForm<RationalFunction> vf_to_twoform(const VectorField3& X) { return {X.P, X.Q, X.R}; }

namespace detail {

inline std::string form_term(const std::string& coef, const char* basis) {
  if (coef == "1") return basis;
  if (coef == "-1") return std::string("-") + basis;
  const bool compound = coef.find_first_of("+-*/ ", 1) != std::string::npos;
  return (compound ? "(" + coef + ")" : coef) + "*" + basis;
}

template <class C>
void append_term(std::string& out, const C& c, const char* basis) {
  if (coeff_is_zero(c)) return;
  const std::string term = form_term(to_string(c), basis);
  if (out.empty()) {
    out = term;
  } else if (term[0] == '-' && term.size() > 1 && term[1] != '(') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace detail

template <DifferentialRing C>
std::string to_string(const OneForm<C>& a) {
  std::string out;
  detail::append_term(out, a.x, "dx");
  detail::append_term(out, a.y, "dy");
  detail::append_term(out, a.z, "dz");
  return out.empty() ? "0" : out;
}

template <DifferentialRing C>
std::string to_string(const TwoForm<C>& a) {
  std::string out;
  detail::append_term(out, a.p, "dy^dz");
  detail::append_term(out, a.q, "dz^dx");
  detail::append_term(out, a.r, "dx^dy");
  return out.empty() ? "0" : out;
}

template <DifferentialRing C>
std::string to_string(const ThreeForm<C>& a) {
  std::string out;
  detail::append_term(out, a.c, "dx^dy^dz");
  return out.empty() ? "0" : out;
}

/// Applies f to every coefficient (change of coefficient ring).
template <class F, DifferentialRing C>
auto map_form(const OneForm<C>& a, F f) -> OneForm<decltype(f(a.x))> {
  return {f(a.x), f(a.y), f(a.z)};
}
template <class F, DifferentialRing C>
auto map_form(const TwoForm<C>& a, F f) -> TwoForm<decltype(f(a.p))> {
  return {f(a.p), f(a.q), f(a.r)};
}

template <DifferentialRing C>
OneForm<C> zero_one_form(const C& like) {
  const C z = zero_like(like);
  return {z, z, z};
}

/// a ^ b for 1-forms.
template <DifferentialRing C>
TwoForm<C> wedge(const OneForm<C>& a, const OneForm<C>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// a ^ B. With B = p dy^dz + q dz^dx + r dx^dy each basis product is a
/// cyclic permutation of dx^dy^dz, so c = a_x p + a_y q + a_z r.
template <DifferentialRing C>
ThreeForm<C> wedge(const OneForm<C>& a, const TwoForm<C>& b) {
  return {a.x * b.p + a.y * b.q + a.z * b.r};
}

/// df.
template <DifferentialRing C>
OneForm<C> d(const C& f) {
  return {partial(f, Var::x), partial(f, Var::y), partial(f, Var::z)};
}

/// da for a 1-form.
template <DifferentialRing C>
TwoForm<C> d(const OneForm<C>& a) {
  return {partial(a.z, Var::y) - partial(a.y, Var::z), partial(a.x, Var::z) - partial(a.z, Var::x),
          partial(a.y, Var::x) - partial(a.x, Var::y)};
}

/// dB for a 2-form.
template <DifferentialRing C>
ThreeForm<C> d(const TwoForm<C>& b) {
  return {partial(b.p, Var::x) + partial(b.q, Var::y) + partial(b.r, Var::z)};
}

/// The integrability triple: omega ^ Omega = 0, d omega = alpha ^ omega,
/// d alpha = 0. Throws MathError when omega = 0.
template <DifferentialRing C>
VerificationReport check_probsetup(const OneForm<C>& omega, const OneForm<C>& alpha, const TwoForm<C>& Omega) {
  if (omega.is_zero()) throw MathError("check_probsetup needs omega != 0");
  VerificationReport report;
  const ThreeForm<C> r1 = wedge(omega, Omega);
  report.add("omega^Omega=0", r1.is_zero(), to_string(r1));
  const TwoForm<C> r2 = d(omega) - wedge(alpha, omega);
  report.add("d(omega)-alpha^omega=0", r2.is_zero(), to_string(r2));
  const TwoForm<C> r3 = d(alpha);
  report.add("d(alpha)=0", r3.is_zero(), to_string(r3));
  return report;
}

/// (omega / l, alpha - dl / l). Throws MathError when l = 0.
template <DifferentialField C>
std::pair<OneForm<C>, OneForm<C>> gauge_transform(const OneForm<C>& omega, const OneForm<C>& alpha, const C& l) {
  if (is_zero(l)) throw MathError("gauge factor must be nonzero");
  const C inv = one_like(l) / l;
  return {inv * omega, alpha - inv * d(l)};
}

/// omega divided by its first nonzero coefficient in x, y, z order.
template <DifferentialField C>
OneForm<C> normalize_leading(const OneForm<C>& omega) {
  if (omega.is_zero()) throw MathError("normalize_leading needs omega != 0");
  const C& lead = !is_zero(omega.x) ? omega.x : !is_zero(omega.y) ? omega.y : omega.z;
  return (one_like(lead) / lead) * omega;
}

}  // namespace lvf

#endif  // LVF_FORMS_HPP
