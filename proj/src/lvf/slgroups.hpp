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


#ifndef LVF_SLGROUPS_HPP
#define LVF_SLGROUPS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lvf/cyclotomic.hpp"

namespace lvf {

/// 2x2 matrix over Q(zeta_m).
struct Mat2 {
  CycloNumber a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity(const CycloFieldPtr& field);
  static Mat2 scalar(const CycloNumber& s);

  [[nodiscard]] CycloNumber det() const { return a * d - b * c; }
  [[nodiscard]] CycloNumber trace() const { return a + d; }
  /// Throws MathError when singular.
  [[nodiscard]] Mat2 inverse() const;
  [[nodiscard]] bool is_scalar() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator<(const Mat2& x, const Mat2& y);

  [[nodiscard]] std::string to_string() const;
};

class MatrixGroup {
 public:
  MatrixGroup(CycloFieldPtr field, std::vector<Mat2> generators, std::vector<Mat2> sorted_elements)
      : field_(std::move(field)), gens_(std::move(generators)), elems_(std::move(sorted_elements)) {}

  [[nodiscard]] const CycloFieldPtr& field() const { return field_; }
  [[nodiscard]] const std::vector<Mat2>& generators() const { return gens_; }
  /// Sorted, duplicate free.
  [[nodiscard]] const std::vector<Mat2>& elements() const { return elems_; }
  [[nodiscard]] std::size_t order() const { return elems_.size(); }
  [[nodiscard]] bool contains(const Mat2& g) const;

 private:
  CycloFieldPtr field_;
  std::vector<Mat2> gens_;
  std::vector<Mat2> elems_;
};

/// Breadth-first product closure. Throws MathError for a generator with
/// det != 1 or when more than `cap` elements appear.
MatrixGroup closure(const CycloFieldPtr& field, const std::vector<Mat2>& generators, std::size_t cap = 1000);

enum class GroupKind { cyclic, dihedral, tetrahedral, octahedral, icosahedral };

struct GroupSpec {
  GroupKind kind = GroupKind::cyclic;
  unsigned n = 1;  // order for cyclic, N for binary dihedral

  /// "C:n" (n >= 1), "D:N" (N >= 2), "2T", "2O", "2I"; throws
  /// std::invalid_argument otherwise.
  static GroupSpec parse(const std::string& tag);
  [[nodiscard]] std::string to_string() const;
};

/// Cyclic groups are generated by diag(zeta_n, zeta_n^-1) over conductor n,
/// binary dihedral ones also by [[0, 1], [-1, 0]] over conductor 2N, 2T and
/// 2O use conductor 8 and 2I conductor 20.
MatrixGroup binary_group(const GroupSpec& spec);

/// Generators commute pairwise.
bool is_abelian(const MatrixGroup& g);
/// Some element has order |G|.
bool is_cyclic(const MatrixGroup& g);
std::size_t element_order(const Mat2& m);

/// Commuting finite-order matrices are simultaneously diagonalizable, so a
/// finite subgroup of SL(2) has a common eigenvector exactly when it is
/// abelian. Conversely a common eigenvector makes the group triangular; its
/// commutators are then unipotent of finite order, hence trivial. For abelian
/// groups the answer is cross-checked against common_eigenvector; a
/// mismatch throws std::logic_error.
bool has_common_eigenvector(const MatrixGroup& g);

/// Direct search: eigenvectors of one non-scalar generator, using roots of
/// unity of the field as eigenvalue candidates, tested against every
/// generator. nullopt when nothing is found.
std::optional<std::array<CycloNumber, 2>> common_eigenvector(const MatrixGroup& g);

/// Kernels of all surjections onto Z/2, via G / <g^2 : g in G>.
std::vector<MatrixGroup> index_two_subgroups(const MatrixGroup& g);

/// |G| / |G intersect {I, -I}|.
std::size_t pgl_projection_order(const MatrixGroup& g);

}  // namespace lvf

#endif  // LVF_SLGROUPS_HPP
