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


#ifndef LVF_RADICAL_HPP
#define LVF_RADICAL_HPP

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lvf/cyclotomic.hpp"
#include "lvf/linear_solve.hpp"
#include "lvf/rational_function.hpp"

namespace lvf {

/// The extension K(t), t^m = g. Irreducibility of T^m - g is not checked;
/// without it the arithmetic is still a well-defined ring computation.
class RadicalContext {
 public:
  RadicalContext(unsigned m, RationalFunction g);

  [[nodiscard]] unsigned m() const { return m_; }
  [[nodiscard]] const RationalFunction& g() const { return g_; }
  /// (d g / d v) / (m g), so that dt/dv = t times this.
  [[nodiscard]] const RationalFunction& log_derivative(Var v) const {
    return dlog_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] const CycloFieldPtr& cyclo() const { return cyclo_; }
  /// zeta_m^j for j < m.
  [[nodiscard]] const std::vector<CycloNumber>& zeta_powers() const { return zeta_; }

  friend bool operator==(const RadicalContext& a, const RadicalContext& b) {
    return a.m_ == b.m_ && a.g_ == b.g_;
  }

 private:
  unsigned m_;
  RationalFunction g_;
  std::array<RationalFunction, 3> dlog_;
  CycloFieldPtr cyclo_;
  std::vector<CycloNumber> zeta_;
};

using RadicalContextPtr = std::shared_ptr<const RadicalContext>;

inline RadicalContextPtr make_radical_context(unsigned m, RationalFunction g) {
  return std::make_shared<const RadicalContext>(m, std::move(g));
}

namespace detail {

inline RationalFunction embed_scalar(const RationalFunction& f, const RationalFunction&) { return f; }
inline CycloFunction embed_scalar(const RationalFunction& f, const CycloFunction& like) {
  return CycloFunction::constant(like.field(), f);
}

}  // namespace detail

/// a_0 + a_1 t + ... + a_{m-1} t^{m-1} with coefficients in C, where C is
/// RationalFunction or CycloFunction (base field with zeta_m adjoined).
template <class C>
class RadicalElement {
 public:
  RadicalElement(RadicalContextPtr ctx, std::vector<C> coeffs) : ctx_(std::move(ctx)), a_(std::move(coeffs)) {
    if (a_.size() != ctx_->m()) throw MathError("radical element needs exactly m coefficients");
  }

  /// c + 0 t + ... .
  static RadicalElement embed(RadicalContextPtr ctx, const C& c) {
    std::vector<C> a(ctx->m(), zero_like(c));
    a[0] = c;
    return RadicalElement(std::move(ctx), std::move(a));
  }

  [[nodiscard]] const RadicalContextPtr& context() const { return ctx_; }
  [[nodiscard]] const std::vector<C>& coeffs() const { return a_; }
  [[nodiscard]] const C& coeff(std::size_t i) const { return a_.at(i); }
  [[nodiscard]] unsigned m() const { return ctx_->m(); }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : a_) {
      if (!lvf::is_zero(c)) return false;
    }
    return true;
  }
  /// True when every t^i component with i > 0 vanishes.
  [[nodiscard]] bool in_base() const {
    for (std::size_t i = 1; i < a_.size(); ++i) {
      if (!lvf::is_zero(a_[i])) return false;
    }
    return true;
  }

  RadicalElement operator-() const {
    RadicalElement r = *this;
    for (auto& c : r.a_) c = -c;
    return r;
  }
  friend RadicalElement operator+(const RadicalElement& a, const RadicalElement& b) {
    a.check_same(b);
    RadicalElement r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
    return r;
  }
  friend RadicalElement operator-(const RadicalElement& a, const RadicalElement& b) { return a + (-b); }
  friend RadicalElement operator*(const RadicalElement& a, const RadicalElement& b) {
    a.check_same(b);
    const std::size_t m = a.a_.size();
    std::vector<C> out(m, zero_like(a.a_[0]));
    const C g = detail::embed_scalar(a.ctx_->g(), a.a_[0]);
    for (std::size_t i = 0; i < m; ++i) {
      if (lvf::is_zero(a.a_[i])) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (lvf::is_zero(b.a_[j])) continue;
        const C p = a.a_[i] * b.a_[j];
        if (i + j < m) {
          out[i + j] = out[i + j] + p;
        } else {
          out[i + j - m] = out[i + j - m] + p * g;  // t^m = g
        }
      }
    }
    return RadicalElement(a.ctx_, std::move(out));
  }
  friend RadicalElement operator*(const RadicalElement& a, const C& s) {
    RadicalElement r = a;
    for (auto& c : r.a_) c = c * s;
    return r;
  }
  friend RadicalElement operator*(const C& s, const RadicalElement& a) { return a * s; }

  /// Throws MathError on division by zero.
  friend RadicalElement operator/(const RadicalElement& a, const RadicalElement& b) {
    a.check_same(b);
    if (b.is_zero()) throw MathError("division by zero radical element");
    const std::size_t m = a.a_.size();
    if (b.in_base()) {
      RadicalElement r = a;
      for (auto& c : r.a_) c = c / b.a_[0];
      return r;
    }
    if (m == 2) {
      // (a0 + a1 t)(b0 - b1 t) / (b0^2 - b1^2 g)
      const C g = detail::embed_scalar(a.ctx_->g(), a.a_[0]);
      const C norm = b.a_[0] * b.a_[0] - b.a_[1] * b.a_[1] * g;
      if (lvf::is_zero(norm)) throw MathError("zero divisor in radical extension (T^2 - g reducible)");
      RadicalElement conj(b.ctx_, {b.a_[0], -b.a_[1]});
      RadicalElement r = a * conj;
      for (auto& c : r.a_) c = c / norm;
      return r;
    }
    if (m == 3) {
      // Adjugate of the multiplication matrix: b c = N with N the norm.
      const C g = detail::embed_scalar(a.ctx_->g(), a.a_[0]);
      const C& b0 = b.a_[0];
      const C& b1 = b.a_[1];
      const C& b2 = b.a_[2];
      const C c0 = b0 * b0 - g * b1 * b2;
      const C c1 = g * b2 * b2 - b0 * b1;
      const C c2 = b1 * b1 - b0 * b2;
      const C norm = b0 * c0 + g * (b1 * c2 + b2 * c1);
      if (lvf::is_zero(norm)) throw MathError("zero divisor in radical extension (T^3 - g reducible)");
      RadicalElement r = a * RadicalElement(b.ctx_, {c0, c1, c2});
      for (auto& c : r.a_) c = c / norm;
      return r;
    }
    // Column j of the multiplication matrix holds b * t^j.
    Matrix<C> mat(m, std::vector<C>(m, zero_like(a.a_[0])));
    RadicalElement col = b;
    const RadicalElement t = generator_like(b);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < m; ++i) mat[i][j] = col.a_[i];
      col = col * t;
    }
    auto x = solve_linear(std::move(mat), a.a_, zero_like(a.a_[0]));
    if (!x) throw MathError("zero divisor in radical extension (T^m - g reducible)");
    RadicalElement r(a.ctx_, std::move(*x));
    if (!(r * b == a)) throw MathError("zero divisor in radical extension (T^m - g reducible)");
    return r;
  }

  RadicalElement& operator+=(const RadicalElement& o) { return *this = *this + o; }
  RadicalElement& operator-=(const RadicalElement& o) { return *this = *this - o; }
  RadicalElement& operator*=(const RadicalElement& o) { return *this = *this * o; }

  friend bool operator==(const RadicalElement& a, const RadicalElement& b) {
    return *a.ctx_ == *b.ctx_ && a.a_ == b.a_;
  }

  /// d/dv, using dt = t dg / (m g) on each t^i.
  [[nodiscard]] RadicalElement differentiate(Var v) const {
    std::vector<C> out;
    out.reserve(a_.size());
    const RationalFunction& dl = ctx_->log_derivative(v);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      C d = partial(a_[i], v);
      if (i > 0 && !lvf::is_zero(a_[i]) && !dl.is_zero()) {
        d = d + a_[i] * detail::embed_scalar(dl * RationalFunction(static_cast<long>(i)), a_[i]);
      }
      out.push_back(std::move(d));
    }
    return RadicalElement(ctx_, std::move(out));
  }

  /// "a0 + (a1)*t + (a2)*t^2" with zero parts omitted.
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (lvf::is_zero(a_[i])) continue;
      const std::string coef = lvf::to_string(a_[i]);
      std::string term;
      if (i == 0) {
        term = coef;
      } else {
        const std::string power = i == 1 ? "t" : "t^" + std::to_string(i);
        term = coef == "1" ? power : "(" + coef + ")*" + power;
      }
      out += out.empty() ? term : " + " + term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_same(const RadicalElement& o) const {
    if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) throw MathError("radical context mismatch");
  }

  static RadicalElement generator_like(const RadicalElement& e) {
    std::vector<C> a(e.a_.size(), zero_like(e.a_[0]));
    a[1] = one_like(e.a_[0]);
    return RadicalElement(e.ctx_, std::move(a));
  }

  RadicalContextPtr ctx_;
  std::vector<C> a_;
};

using RadicalFunction = RadicalElement<RationalFunction>;
using RadicalCycloFunction = RadicalElement<CycloFunction>;

/// The element t of K(t).
RadicalFunction radical_generator(const RadicalContextPtr& ctx);
RadicalFunction radical_embed(const RadicalContextPtr& ctx, const RationalFunction& f);

/// Coefficients a_i -> a_i zeta^(i j) (the automorphism t -> zeta^j t).
/// Needs rational roots of unity, so only m = 2 (or j = 0) is accepted here;
/// promote() first for m > 2.
RadicalFunction conjugate(const RadicalFunction& e, unsigned j);
RadicalCycloFunction conjugate(const RadicalCycloFunction& e, unsigned j);

/// Same element with coefficients in K(zeta_m).
RadicalCycloFunction promote(const RadicalFunction& e);

/// (1/m) sum_j conjugate(e, j), returned as a base-field value. Throws
/// MathError if the average does not land in the base field.
RationalFunction galois_average(const RadicalFunction& e);

// Coefficient-field contract.
template <class C>
RadicalElement<C> partial(const RadicalElement<C>& e, Var v) {
  return e.differentiate(v);
}
template <class C>
RadicalElement<C> zero_like(const RadicalElement<C>& e) {
  return RadicalElement<C>::embed(e.context(), zero_like(e.coeff(0)));
}
template <class C>
RadicalElement<C> one_like(const RadicalElement<C>& e) {
  return RadicalElement<C>::embed(e.context(), one_like(e.coeff(0)));
}
template <class C>
bool is_zero(const RadicalElement<C>& e) {
  return e.is_zero();
}
template <class C>
std::string to_string(const RadicalElement<C>& e) {
  return e.to_string();
}

}  // namespace lvf

#endif  // LVF_RADICAL_HPP
