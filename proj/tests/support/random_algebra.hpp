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

// Hand-rolled generators for property tests. Every generator takes the RNG
// explicitly so each test case is reproducible from its seed.

#ifndef LVF_TESTS_RANDOM_ALGEBRA_HPP
#define LVF_TESTS_RANDOM_ALGEBRA_HPP

#include <random>
#include <vector>

#include "lvf/rational_function.hpp"
#include "lvf/upoly.hpp"

namespace lvf::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long range = 5, long max_den = 3) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(Rng& rng, long range = 5, long max_den = 3) {
  Rational r;
  do r = random_rational(rng, range, max_den);
  while (r == 0);
  return r;
}

/// Sparse polynomial with up to `terms` terms, per-variable degree <= max_deg,
/// restricted to the listed variables.
inline Polynomial random_polynomial(Rng& rng, int terms = 3, unsigned max_deg = 2,
                                    const std::vector<Var>& vars = {Var::x, Var::y, Var::z}) {
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) {
    Exponents ex{0, 0, 0};
    for (Var v : vars) ex[static_cast<std::size_t>(v)] = e(rng);
    out.push_back(Term{ex, random_rational(rng)});
  }
  return Polynomial::from_terms(std::move(out));
}

inline Polynomial random_nonzero_polynomial(Rng& rng, int terms = 3, unsigned max_deg = 2,
                                            const std::vector<Var>& vars = {Var::x, Var::y, Var::z}) {
  Polynomial p;
  do p = random_polynomial(rng, terms, max_deg, vars);
  while (p.is_zero());
  return p;
}

inline RationalFunction random_rational_function(
    Rng& rng, int terms = 3, unsigned max_deg = 2,
    const std::vector<Var>& vars = {Var::x, Var::y, Var::z}) {
  return RationalFunction(random_polynomial(rng, terms, max_deg, vars),
                          random_nonzero_polynomial(rng, 2, max_deg, vars));
}

inline RationalFunction random_nonzero_rational_function(
    Rng& rng, int terms = 3, unsigned max_deg = 2,
    const std::vector<Var>& vars = {Var::x, Var::y, Var::z}) {
  return RationalFunction(random_nonzero_polynomial(rng, terms, max_deg, vars),
                          random_nonzero_polynomial(rng, 2, max_deg, vars));
}

inline UPoly random_upoly(Rng& rng, int degree, long range = 4) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng, range, 2));
  if (c.back() == 0) c.back() = 1;
  return UPoly(std::move(c));
}

}  // namespace lvf::testing

#endif  // LVF_TESTS_RANDOM_ALGEBRA_HPP
