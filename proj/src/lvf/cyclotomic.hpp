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


#ifndef LVF_CYCLOTOMIC_HPP
#define LVF_CYCLOTOMIC_HPP

#include <complex>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lvf/linear_solve.hpp"
#include "lvf/rational_function.hpp"

namespace lvf {

/// Integer coefficients of the m-th cyclotomic polynomial, constant term
/// first.
std::vector<Integer> cyclotomic_polynomial(unsigned m);

/// Q(zeta_m) presented as Q[X]/(Phi_m).
class CycloField {
 public:
  explicit CycloField(unsigned m);

  [[nodiscard]] unsigned conductor() const { return m_; }
  /// phi(m), the dimension over Q.
  [[nodiscard]] std::size_t degree() const { return phi_.size() - 1; }
  [[nodiscard]] const std::vector<Integer>& phi() const { return phi_; }

 private:
  unsigned m_;
  std::vector<Integer> phi_;
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

inline CycloFieldPtr make_cyclo_field(unsigned m) { return std::make_shared<const CycloField>(m); }

/// Element of T(zeta_m) for T = Rational or RationalFunction, stored on the
/// power basis 1, zeta, ..., zeta^(phi(m)-1). T() must be zero and T(1) one.
template <class T>
class CycloElement {
 public:
  CycloElement(CycloFieldPtr field, std::vector<T> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    reduce();
  }

  static CycloElement constant(CycloFieldPtr field, T value) {
    return CycloElement(std::move(field), std::vector<T>{std::move(value)});
  }

  /// zeta^j for any integer j.
  static CycloElement zeta(CycloFieldPtr field, long j) {
    const long m = field->conductor();
    const long e = ((j % m) + m) % m;
    std::vector<T> c(static_cast<std::size_t>(e) + 1);
    c.back() = T(1);
    return CycloElement(std::move(field), std::move(c));
  }

  [[nodiscard]] const CycloFieldPtr& field() const { return field_; }
  [[nodiscard]] const std::vector<T>& coeffs() const { return c_; }
  [[nodiscard]] bool is_zero() const {
    for (const auto& c : c_) {
      if (!is_zero_value(c)) return false;
    }
    return true;
  }
  /// True when the value lies in T itself.
  [[nodiscard]] bool in_base() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (!is_zero_value(c_[i])) return false;
    }
    return true;
  }
  [[nodiscard]] const T& base_part() const { return c_[0]; }

  CycloElement operator-() const {
    CycloElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    a.check_same(b);
    CycloElement r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend CycloElement operator-(const CycloElement& a, const CycloElement& b) { return a + (-b); }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    a.check_same(b);
    const std::size_t n = a.c_.size();
    std::vector<T> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (std::size_t j = 0; j < n; ++j) prod[i + j] = prod[i + j] + a.c_[i] * b.c_[j];
    }
    return CycloElement(a.field_, std::move(prod));
  }
  friend CycloElement operator*(const CycloElement& a, const T& s) {
    CycloElement r = a;
    for (auto& c : r.c_) c = c * s;
    return r;
  }
  friend CycloElement operator*(const T& s, const CycloElement& a) { return a * s; }
  CycloElement& operator+=(const CycloElement& o) { return *this = *this + o; }
  CycloElement& operator-=(const CycloElement& o) { return *this = *this - o; }
  CycloElement& operator*=(const CycloElement& o) { return *this = *this * o; }

  /// Throws MathError for zero.
  [[nodiscard]] CycloElement inverse() const {
    if (is_zero()) throw MathError("inverse of zero cyclotomic element");
    const std::size_t n = c_.size();
    Matrix<T> mat(n, std::vector<T>(n));
    for (std::size_t j = 0; j < n; ++j) {
      const CycloElement col = *this * zeta(field_, static_cast<long>(j));
      for (std::size_t i = 0; i < n; ++i) mat[i][j] = col.c_[i];
    }
    std::vector<T> rhs(n);
    rhs[0] = T(1);
    auto x = solve_linear(std::move(mat), std::move(rhs), T());
    if (!x) throw MathError("cyclotomic element is not invertible");
    return CycloElement(field_, std::move(*x));
  }
  friend CycloElement operator/(const CycloElement& a, const CycloElement& b) { return a * b.inverse(); }

  /// Complex conjugation zeta -> zeta^(-1).
  [[nodiscard]] CycloElement conjugate() const {
    CycloElement r = constant(field_, T());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!is_zero_value(c_[i])) r += zeta(field_, -static_cast<long>(i)) * c_[i];
    }
    return r;
  }

  friend bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.field_->conductor() == b.field_->conductor() && a.c_ == b.c_;
  }
  friend bool operator<(const CycloElement& a, const CycloElement& b) { return a.c_ < b.c_; }

  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_zero_value(c_[i])) continue;
      std::string coef = lvf::to_string(c_[i]);
      const bool compound = coef.find_first_of("+-*/ ", 1) != std::string::npos;
      std::string term;
      if (i == 0) {
        term = coef;
      } else {
        const std::string power = i == 1 ? "zeta" : "zeta^" + std::to_string(i);
        if (coef == "1") {
          term = power;
        } else if (coef == "-1") {
          term = "-" + power;
        } else {
          term = (compound ? "(" + coef + ")" : coef) + "*" + power;
        }
      }
      if (out.empty()) {
        out = term;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_same(const CycloElement& o) const {
    if (field_->conductor() != o.field_->conductor()) throw MathError("cyclotomic conductor mismatch");
  }

  void reduce() {
    const auto& phi = field_->phi();
    const std::size_t n = field_->degree();
    for (std::size_t k = c_.size(); k-- > n;) {
      if (is_zero_value(c_[k])) continue;
      const T lead = c_[k];
      for (std::size_t i = 0; i < n; ++i) {
        if (phi[i] != 0) c_[k - n + i] = c_[k - n + i] - lead * T(Rational(phi[i]));
      }
    }
    c_.resize(n);
  }

  CycloFieldPtr field_;
  std::vector<T> c_;
};

using CycloNumber = CycloElement<Rational>;

/// Value under zeta_m -> exp(2 pi i / m).
std::complex<double> to_complex(const CycloNumber& a);

inline std::string to_string(const CycloNumber& a) { return a.to_string(); }

// Coefficient-field contract for T(zeta_m) with T = RationalFunction.
using CycloFunction = CycloElement<RationalFunction>;

inline CycloFunction partial(const CycloFunction& a, Var v) {
  std::vector<RationalFunction> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(x.derivative(v));
  return CycloFunction(a.field(), std::move(c));
}
inline CycloFunction zero_like(const CycloFunction& a) { return CycloFunction::constant(a.field(), {}); }
inline CycloFunction one_like(const CycloFunction& a) { return CycloFunction::constant(a.field(), 1); }
inline bool is_zero(const CycloFunction& a) { return a.is_zero(); }
inline std::string to_string(const CycloFunction& a) { return a.to_string(); }

}  // namespace lvf

#endif  // LVF_CYCLOTOMIC_HPP
