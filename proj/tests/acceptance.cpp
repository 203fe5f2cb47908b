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


// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 iff all
// criteria pass. Tolerances and time limits are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lvf/analysis.hpp"
#include "lvf/conservation.hpp"
#include "lvf/descent.hpp"
#include "lvf/families.hpp"
#include "lvf/parser.hpp"
#include "lvf/series_verify.hpp"
#include "lvf/slgroups.hpp"
#include "support/random_algebra.hpp"

using namespace lvf;
using lvf::testing::Rng;
using F1 = OneForm<RationalFunction>;
using F2 = TwoForm<RationalFunction>;

namespace {

constexpr double kD3Seconds = 1.0;
constexpr double kSeriesSeconds = 10.0;
constexpr double kGroupSeconds = 30.0;
constexpr int kSeriesOrder = 40;
constexpr double kDriftBound = 1e-8;
constexpr double kSlopeTarget = 4.0;
constexpr double kSlopeTolerance = 0.5;
constexpr int kMinInstances = 100;

const std::vector<std::string> kShippedFamilies{"233", "234", "235", "223"};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RationalFunction P(const char* s) { return parse_expression(s); }

F1 random_one_form(Rng& rng) {
  return {lvf::testing::random_rational_function(rng, 2, 2), lvf::testing::random_rational_function(rng, 2, 2),
          lvf::testing::random_rational_function(rng, 2, 2)};
}

RadicalFunction random_radical(Rng& rng, const RadicalContextPtr& ctx) {
  std::vector<RationalFunction> a;
  for (unsigned i = 0; i < ctx->m(); ++i) a.push_back(lvf::testing::random_rational_function(rng, 2, 2));
  return RadicalFunction(ctx, std::move(a));
}

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const D3ExampleBundle b = d3_bundle();
  const auto r1 = check_probsetup(b.omega1, b.alpha1, b.Omega);
  const auto r2 = check_probsetup(b.omega2, b.alpha2, b.Omega);
  const double s = seconds_since(t0);
  o.require(r1.all_pass(), "sheet 1 triple");
  o.require(r2.all_pass(), "sheet 2 triple");
  o.require(b.ctx->m() == 2 && b.ctx->g() == P("x*(x-1)"), "extension is sqrt(x(x-1))");
  o.require(s < kD3Seconds, "runtime");
  o.detail << "6 exact checks, " << s << " s (limit " << kD3Seconds << " s)";
}

void criterion2(Outcome& o) {
  const RationalFunction q = platonic_q(TriangleParameters::from_triple(2, 2, 3));
  const RationalFunction expected = P("3/(16*x^2) - 11/(72*x*(x-1)) + 3/(16*(x-1)^2)");
  o.require(q == expected, "q equals 3/16 x^-2 - 11/72 (x(x-1))^-1 + 3/16 (x-1)^-2");
  o.detail << "q = " << q.to_string();
}

void criterion3(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checks = 0;
  for (const auto& tag : kShippedFamilies) {
    const auto r = verify_family_series(TriangleParameters::from_tag(tag), Rational(1, 2), kSeriesOrder);
    checks += r.checks().size();
    o.require(r.checks().size() == 6, tag + " runs six identities");
    for (const auto& c : r.checks()) o.require(c.pass, tag + " " + c.name + " residual " + c.witness);
  }
  const double s = seconds_since(t0);
  o.require(s < kSeriesSeconds, "runtime");
  o.detail << checks << " identities through order " << kSeriesOrder << ", " << s << " s (limit " << kSeriesSeconds
           << " s)";
}

void criterion4(Outcome& o) {
  using Roots = std::pair<Rational, Rational>;
  const auto m2 = indicial_roots(platonic_q(TriangleParameters::from_tag("223")), 0);
  const auto m3 = indicial_roots(platonic_q(TriangleParameters::from_tag("233")), 1);
  o.require(m2.roots == Roots(Rational(1, 4), Rational(3, 4)), "m = 2 roots 1/4, 3/4");
  o.require(m3.roots == Roots(Rational(1, 3), Rational(2, 3)), "m = 3 roots 1/3, 2/3");
  for (const auto& tag : kShippedFamilies) {
    const auto res = rational_inhomogeneous_solution(platonic_q(TriangleParameters::from_tag(tag)));
    o.require(res.status == InhomogeneousResult::Status::no_solution_certificate, tag + " nonexistence certificate");
  }
  o.detail << "m=2: " << m2.to_string() << "; m=3: " << m3.to_string() << "; " << kShippedFamilies.size()
           << " families certified";
}

void criterion5(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const MatrixGroup t = binary_group(GroupSpec::parse("2T"));
  const MatrixGroup oct = binary_group(GroupSpec::parse("2O"));
  const MatrixGroup ico = binary_group(GroupSpec::parse("2I"));
  o.require(t.order() == 24, "|2T| = 24");
  o.require(pgl_projection_order(t) == 12, "2T projects to order 12");
  o.require(ico.order() == 120, "|2I| = 120");
  o.require(oct.order() == 48, "|2O| = 48");
  o.require(index_two_subgroups(t).empty(), "2T has no index-2 subgroup");
  o.require(index_two_subgroups(ico).empty(), "2I has no index-2 subgroup");
  const auto oct_subs = index_two_subgroups(oct);
  o.require(oct_subs.size() == 1 && oct_subs[0].order() == 24, "2O has exactly one index-2 subgroup, of order 24");
  for (unsigned n = 2; n <= 12; ++n) {
    const MatrixGroup dn = binary_group(GroupSpec::parse("D:" + std::to_string(n)));
    o.require(dn.order() == 4 * n, "|D:" + std::to_string(n) + "| = 4N");
    bool cyclic_sub = false;
    for (const auto& h : index_two_subgroups(dn)) cyclic_sub = cyclic_sub || is_cyclic(h);
    o.require(cyclic_sub, "D:" + std::to_string(n) + " has a cyclic index-2 subgroup");
  }
  const double s = seconds_since(t0);
  o.require(s < kGroupSeconds, "runtime");
  o.detail << "2T, 2O, 2I and D:2..12, " << s << " s (limit " << kGroupSeconds << " s)";
}

void criterion6(Outcome& o) {
  std::vector<std::string> catalog{"2T", "2O", "2I"};
  for (int n = 1; n <= 24; ++n) catalog.push_back("C:" + std::to_string(n));
  for (int n = 2; n <= 12; ++n) catalog.push_back("D:" + std::to_string(n));
  std::size_t with_eigen = 0;
  for (const auto& tag : catalog) {
    const MatrixGroup g = binary_group(GroupSpec::parse(tag));
    const bool eigen = has_common_eigenvector(g);
    with_eigen += eigen ? 1 : 0;
    o.require(!eigen || is_cyclic(g), tag + " has a common eigenvector but is not cyclic");
  }
  o.detail << catalog.size() << " groups, " << with_eigen << " with a common eigenvector, no counterexample";
}

void criterion7(Outcome& o) {
  const auto p = TriangleParameters::from_tag("223");
  const State3 start{0.5, 1.0, 0.0};
  const auto run = numeric_conservation_check(p, start, 0.3, 1e-3, kSeriesOrder);
  o.require(run.max_drift <= kDriftBound, "drift bound");
  const auto study = conservation_convergence(p, start, 0.3, {1e-2, 5e-3, 1e-3}, kSeriesOrder);
  o.require(std::abs(study.xi_error_slope - kSlopeTarget) <= kSlopeTolerance, "fourth-order slope");
  o.detail << "drift " << run.max_drift << " (bound " << kDriftBound << "), slope " << study.xi_error_slope
           << " (target " << kSlopeTarget << " +- " << kSlopeTolerance << "); raw-drift slope "
           << study.drift_slope << " (series floor)";
}

void criterion8(Outcome& o) {
  Rng rng(20261016);
  int dd = 0;
  int leibniz = 0;
  int antisym = 0;
  int gauge = 0;
  int conj = 0;
  int average = 0;
  int descent = 0;
  for (int i = 0; i < kMinInstances; ++i) {
    const RationalFunction f = lvf::testing::random_rational_function(rng, 3, 2);
    const F1 w = random_one_form(rng);
    const bool ok_dd = d(d(f)).is_zero() && d(d(w)).is_zero();
    dd += ok_dd ? 1 : 0;
    leibniz += d(f * w) == wedge(d(f), w) + f * d(w) ? 1 : 0;
    const F1 v = random_one_form(rng);
    antisym += wedge(w, v) == -wedge(v, w) && wedge(w, w).is_zero() ? 1 : 0;
  }

  int gauge_trials = 0;
  while (gauge_trials < kMinInstances) {
    F1 w;
    F1 a;
    F2 Om;
    if (gauge_trials % 2 == 0) {
      const RationalFunction f = lvf::testing::random_nonzero_rational_function(rng, 2, 2);
      const RationalFunction phi = lvf::testing::random_rational_function(rng, 2, 2);
      const RationalFunction psi = lvf::testing::random_rational_function(rng, 2, 2);
      w = f * d(phi);
      a = (RationalFunction(1) / f) * d(f);
      Om = wedge(d(phi), d(psi));
    } else {
      w = random_one_form(rng);
      a = random_one_form(rng);
      Om = F2{lvf::testing::random_rational_function(rng, 2, 2), lvf::testing::random_rational_function(rng, 2, 2),
              lvf::testing::random_rational_function(rng, 2, 2)};
    }
    if (w.is_zero()) continue;
    ++gauge_trials;
    const auto [w2, a2] = gauge_transform(w, a, lvf::testing::random_nonzero_rational_function(rng, 2, 2));
    const auto before = check_probsetup(w, a, Om);
    const auto after = check_probsetup(w2, a2, Om);
    bool same = true;
    for (std::size_t k = 0; k < 3; ++k) same = same && before.checks()[k].pass == after.checks()[k].pass;
    gauge += same ? 1 : 0;
  }

  const auto c2 = make_radical_context(2, P("x*(x-1)*y"));
  const auto c3 = make_radical_context(3, P("x - z^2"));
  for (int i = 0; i < kMinInstances; ++i) {
    const Var var = kAllVars[static_cast<std::size_t>(i % 3)];
    const RadicalFunction a = random_radical(rng, c2);
    const RadicalFunction b = random_radical(rng, c2);
    const RadicalCycloFunction a3 = promote(random_radical(rng, c3));
    const RadicalCycloFunction b3 = promote(random_radical(rng, c3));
    const bool ok = conjugate(a * b, 1) == conjugate(a, 1) * conjugate(b, 1) &&
                    conjugate(a + b, 1) == conjugate(a, 1) + conjugate(b, 1) &&
                    conjugate(a, 1).differentiate(var) == conjugate(a.differentiate(var), 1) &&
                    conjugate(a3 * b3, 1) == conjugate(a3, 1) * conjugate(b3, 1) &&
                    conjugate(a3, 2).differentiate(var) == conjugate(a3.differentiate(var), 2);
    conj += ok ? 1 : 0;
    const auto& ctx = i % 2 == 0 ? c2 : c3;
    const OneForm<RadicalFunction> form{random_radical(rng, ctx), random_radical(rng, ctx), random_radical(rng, ctx)};
    const F1 avg = galois_average(form);
    const RationalFunction g = lvf::testing::random_rational_function(rng, 2, 2);
    const bool projects = avg.x == form.x.coeff(0) && avg.y == form.y.coeff(0) && avg.z == form.z.coeff(0) &&
                          galois_average(radical_embed(ctx, g)) == g;
    average += projects ? 1 : 0;
  }

  int descent_trials = 0;
  while (descent_trials < kMinInstances) {
    const unsigned m = 2 + static_cast<unsigned>(descent_trials % 2);
    const auto ctx = make_radical_context(m, RationalFunction(lvf::testing::random_nonzero_polynomial(rng, 2, 1)));
    const unsigned j = static_cast<unsigned>(rng() % m);
    const RationalFunction c = lvf::testing::random_nonzero_rational_function(rng, 2, 1);
    const RationalFunction a = lvf::testing::random_nonzero_rational_function(rng, 2, 1);
    const RationalFunction phi = lvf::testing::random_rational_function(rng, 2, 1);
    const F1 eta = (c * a) * d(phi);
    if (eta.is_zero()) continue;
    ++descent_trials;
    RadicalFunction tj = radical_embed(ctx, 1);
    for (unsigned k = 0; k < j; ++k) tj = tj * radical_generator(ctx);
    const OneForm<RadicalFunction> omega = tj * embed_form(ctx, eta);
    const F1 dlog{ctx->log_derivative(Var::x), ctx->log_derivative(Var::y), ctx->log_derivative(Var::z)};
    const F1 alpha = (RationalFunction(1) / a) * d(a) + (RationalFunction(1) / c) * d(c) +
                     RationalFunction(static_cast<long>(j)) * dlog;
    const auto pieces = cyclic_descend(omega, alpha, ctx);
    descent += pieces.size() == 1 && pieces[0].index == j && reassemble(ctx, pieces) == omega ? 1 : 0;
  }

  const std::vector<std::pair<const char*, int>> suites{{"d o d = 0", dd},
                                                        {"Leibniz", leibniz},
                                                        {"wedge antisymmetry", antisym},
                                                        {"gauge invariance", gauge},
                                                        {"conjugation automorphism", conj},
                                                        {"galois average in base field", average},
                                                        {"cyclic descent reassembly", descent}};
  const char* sep = "";
  for (const auto& [name, passed] : suites) {
    o.require(passed == kMinInstances, name);
    o.detail << sep << name << " " << passed << "/" << kMinInstances;
    sep = "; ";
  }
}

void criterion9(Outcome& o) {
  std::vector<std::string> families = kShippedFamilies;
  for (int n = 3; n <= 8; ++n) families.push_back("22N:" + std::to_string(n));
  for (const auto& tag : families) {
    const RationalFunction q = platonic_q(TriangleParameters::from_tag(tag));
    const auto r = verify_series_identities(q, q + 1, Rational(1, 2), 20);
    bool witnessed = false;
    for (const auto& c : r.checks()) witnessed = witnessed || (!c.pass && !c.witness.empty() && c.witness != "0");
    o.require(witnessed, tag + " perturbed q went unnoticed");
  }
  const auto bad = check_probsetup(F1{1, 0, 0}, F1{0, 0, 0}, F2{1, 0, 0});
  o.require(!bad.all_pass(), "(dx, 0, dy^dz) must fail");
  o.detail << families.size() << " perturbed families caught; (dx, 0, dy^dz) witness "
           << bad.checks()[0].witness;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"exact D3 verification", criterion1},
      {"platonic potential (2,2,3)", criterion2},
      {"series identities for shipped families", criterion3},
      {"indicial obstruction", criterion4},
      {"binary group facts", criterion5},
      {"common eigenvector implies cyclic", criterion6},
      {"numeric conservation", criterion7},
      {"exact property suites", criterion8},
      {"negative controls", criterion9},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
