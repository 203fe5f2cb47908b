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


#include "lvf/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lvf {

std::string_view group_tag_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::tetrahedral:
      return "tetrahedral";
    case GroupTag::octahedral:
      return "octahedral";
    case GroupTag::icosahedral:
      return "icosahedral";
    case GroupTag::dihedral:
      return "dihedral";
  }
  return "?";
}

TriangleParameters TriangleParameters::from_triple(unsigned m, unsigned n, unsigned p) {
  std::array<unsigned, 3> s{m, n, p};
  std::sort(s.begin(), s.end());
  TriangleParameters t{m, n, p, GroupTag::dihedral};
  if (s[0] == 2 && s[1] == 3 && s[2] == 3) {
    t.tag = GroupTag::tetrahedral;
  } else if (s[0] == 2 && s[1] == 3 && s[2] == 4) {
    t.tag = GroupTag::octahedral;
  } else if (s[0] == 2 && s[1] == 3 && s[2] == 5) {
    t.tag = GroupTag::icosahedral;
  } else if (s[0] == 2 && s[1] == 2 && s[2] >= 3) {
    t.tag = GroupTag::dihedral;
  } else {
    throw std::invalid_argument("(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) +
                                ") is not a supported triple");
  }
  return t;
}

TriangleParameters TriangleParameters::from_tag(const std::string& tag) {
  if (tag.rfind("22N:", 0) == 0) {
    const std::string num = tag.substr(4);
    if (num.empty() || num.size() > 6 || num.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad dihedral order in family tag '" + tag + "'");
    }
    return from_triple(2, 2, static_cast<unsigned>(std::stoul(num)));
  }
  if (tag.size() != 3 || tag.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("unknown family tag '" + tag + "'");
  }
  return from_triple(static_cast<unsigned>(tag[0] - '0'), static_cast<unsigned>(tag[1] - '0'),
                     static_cast<unsigned>(tag[2] - '0'));
}

std::string TriangleParameters::to_string() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
}

RationalFunction platonic_q(const TriangleParameters& params) {
  const auto inv_sq = [](unsigned k) { return Rational(1, static_cast<unsigned long>(k) * k); };
  const Rational a = 1 - inv_sq(params.m);
  const Rational c = 1 - inv_sq(params.n);
  const Rational b = 1 - inv_sq(params.p) - a - c;
  const RationalFunction x = RationalFunction::variable(Var::x);
  const RationalFunction x1 = x - 1;
  const RationalFunction quarter(Rational(1, 4));
  return quarter * (RationalFunction(a) / (x * x) + RationalFunction(b) / (x * x1) + RationalFunction(c) / (x1 * x1));
}

ExceptionalSystem build_system(const TriangleParameters& params, const RationalFunction& q) {
  const RationalFunction y = RationalFunction::variable(Var::y);
  const RationalFunction z = RationalFunction::variable(Var::z);
  ExceptionalSystem s{params, q, {1, q * z - 1, -y}, {}};
  s.Omega = vf_to_twoform(s.field);
  return s;
}

ExceptionalSystem build_system(const TriangleParameters& params) { return build_system(params, platonic_q(params)); }

OneForm<RadicalFunction> omega_from_riccati(const RadicalFunction& h, const RationalFunction& q) {
  const auto& ctx = h.context();
  const RadicalFunction y = radical_embed(ctx, RationalFunction::variable(Var::y));
  const RadicalFunction z = radical_embed(ctx, RationalFunction::variable(Var::z));
  const RadicalFunction one = radical_embed(ctx, 1);
  return {one - radical_embed(ctx, q) * z + y * h, one, h};
}

D3ExampleBundle d3_bundle() {
  ExceptionalSystem sys = build_system(TriangleParameters::from_triple(2, 2, 3));
  const RationalFunction x = RationalFunction::variable(Var::x);
  const RationalFunction k = x * (x - 1);
  const RadicalContextPtr ctx = make_radical_context(2, k);
  // h1 = (3(2x - 1) + 2 sqrt(k)) / (12 k).
  const RationalFunction twelve_k = RationalFunction(12) * k;
  const RadicalFunction h1(ctx, {RationalFunction(3) * (RationalFunction(2) * x - 1) / twelve_k,
                                 RationalFunction(2) / twelve_k});
  const RadicalFunction h2 = conjugate(h1, 1);
  const RadicalFunction zero = radical_embed(ctx, 0);
  OneForm<RadicalFunction> omega1 = omega_from_riccati(h1, sys.q);
  OneForm<RadicalFunction> omega2 = conjugate(omega1, 1);
  OneForm<RadicalFunction> alpha1{-h1, zero, zero};
  OneForm<RadicalFunction> alpha2{-h2, zero, zero};
  TwoForm<RadicalFunction> Omega = embed_form(ctx, sys.Omega);
  if (!check_probsetup(omega1, alpha1, Omega).all_pass() || !check_probsetup(omega2, alpha2, Omega).all_pass()) {
    throw std::logic_error("D3 bundle failed its own integrability check");
  }
  return {std::move(sys), k, ctx, h1, h2, std::move(omega1), std::move(omega2),
          std::move(alpha1), std::move(alpha2), std::move(Omega)};
}

}  // namespace lvf
