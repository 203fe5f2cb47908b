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


#ifndef LVF_LINEAR_SOLVE_HPP
#define LVF_LINEAR_SOLVE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lvf/rational.hpp"

namespace lvf {

inline bool is_zero_value(const Rational& r) { return r == 0; }

template <class T>
  requires requires(const T& t) { t.is_zero(); }
bool is_zero_value(const T& t) {
  return t.is_zero();
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Solves A x = b by Gauss-Jordan elimination over an exact field. Free
/// variables are set to `zero`. Returns nullopt when the system is
/// inconsistent.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, std::vector<T> b, const T& zero) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero_value(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const T piv = a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] / piv;
    b[r] = b[r] / piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero_value(a[i][c])) continue;
      const T f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!is_zero_value(b[i])) return std::nullopt;
  }
  std::vector<T> x(cols, zero);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = b[i];
  return x;
}

}  // namespace lvf

#endif  // LVF_LINEAR_SOLVE_HPP
