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


#include "lvf/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lvf/analysis.hpp"
#include "lvf/check_input.hpp"
#include "lvf/conservation.hpp"
#include "lvf/parser.hpp"
#include "lvf/series_verify.hpp"
#include "lvf/slgroups.hpp"

namespace lvf {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(RunReport& r) : r_(r), t0_(Clock::now()) {}
  ~Timer() { r_.duration_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0_).count(); }
  Timer(const Timer&) = delete;
  Timer& operator=(const Timer&) = delete;

 private:
  RunReport& r_;
  Clock::time_point t0_;
};

void add_checks(RunReport& r, const VerificationReport& v, const std::string& prefix = {}) {
  for (const auto& c : v.checks()) r.checks.push_back({prefix + c.name, c.pass, c.witness});
}

void add_check(RunReport& r, std::string name, bool pass, std::string witness = {}) {
  VerificationReport v;
  v.add(std::move(name), pass, std::move(witness));
  add_checks(r, v);
}

TriangleParameters family(const std::string& tag) {
  try {
    return TriangleParameters::from_tag(tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add_obstruction(RunReport& r, const TriangleParameters& p) {
  const RationalFunction q = platonic_q(p);
  r.facts.emplace_back("indicial 0", indicial_roots(q, 0).to_string());
  r.facts.emplace_back("indicial 1", indicial_roots(q, 1).to_string());
  r.facts.emplace_back("indicial infinity", indicial_roots_at_infinity(q).to_string());
  const InhomogeneousResult res = rational_inhomogeneous_solution(q);
  r.facts.emplace_back("xi'' + q*xi = 1", res.explanation);
  const bool ok = res.status == InhomogeneousResult::Status::no_solution_certificate;
  add_check(r, "obstruction verified: no rational xi with xi''+q*xi=1", ok,
            res.xi ? "xi = " + res.xi->to_string() : res.explanation);
}

}  // namespace

bool RunReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["tag"] = tag;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  j["facts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : facts) j["facts"][k] = v;
  j["duration_ms"] = duration_ms;
  return j.dump(2);
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << command << (tag.empty() ? "" : " " + tag) << "\n";
  for (const auto& [k, v] : facts) out << "  " << k << ": " << v << "\n";
  for (const auto& c : checks) {
    out << (c.pass ? "  PASS " : "  FAIL ") << c.name << "\n";
    if (!c.pass) out << "       witness: " << c.witness << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.pass ? 1 : 0;
  out << passed << "/" << checks.size() << " checks passed (" << fmt_double(duration_ms / 1000) << " s)\n";
  return out.str();
}

RunReport cmd_verify_family(const std::string& tag, const std::string& x0_text, int order) {
  RunReport r{"verify-family", tag, {}, {}, 0};
  Timer timer(r);
  const TriangleParameters p = family(tag);
  Rational x0;
  try {
    x0 = parse_rational(x0_text);
  } catch (const std::exception&) {
    throw UsageError("--x0 must be a rational p/q, got '" + x0_text + "'");
  }
  if (x0 == 0 || x0 == 1) throw UsageError("--x0 must avoid the singular points 0 and 1");
  if (order < 8) throw UsageError("--order must be at least 8");
  r.facts.emplace_back("parameters", p.to_string());
  r.facts.emplace_back("group", std::string(group_tag_name(p.tag)));
  r.facts.emplace_back("q", platonic_q(p).to_string());
  r.facts.emplace_back("x0", to_string(x0));
  r.facts.emplace_back("order", std::to_string(order));
  add_checks(r, verify_family_series(p, x0, order), "series: ");
  add_obstruction(r, p);
  if (p.m == 2 && p.n == 2 && p.p == 3) {
    const D3ExampleBundle b = d3_bundle();
    r.facts.emplace_back("h1", b.h1.to_string());
    add_checks(r, check_probsetup(b.omega1, b.alpha1, b.Omega), "exact sheet 1: ");
    add_checks(r, check_probsetup(b.omega2, b.alpha2, b.Omega), "exact sheet 2: ");
    add_checks(r, h1_consistency_check(b, Rational(9, 8), order), "h1 at 9/8: ");
  }
  return r;
}

RunReport cmd_check_text(const std::string& text, const std::string& label) {
  RunReport r{"check", label, {}, {}, 0};
  Timer timer(r);
  CheckProblem problem;
  try {
    problem = parse_check_input(text);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  r.facts.emplace_back("extension",
                       problem.ctx ? "t^" + std::to_string(problem.ctx->m()) + " = " + problem.ctx->g().to_string()
                                   : std::string("none"));
  r.facts.emplace_back("alpha", problem.alpha_defaulted ? "0 (default)" : "given");
  add_checks(r, run_check(problem));
  return r;
}

RunReport cmd_check_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return cmd_check_text(s.str(), path);
}

RunReport cmd_group_facts(const std::string& tag) {
  RunReport r{"group-facts", tag, {}, {}, 0};
  Timer timer(r);
  GroupSpec spec;
  try {
    spec = GroupSpec::parse(tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const MatrixGroup g = binary_group(spec);
  const bool cyclic = is_cyclic(g);
  const bool abelian = is_abelian(g);
  const bool eigen = has_common_eigenvector(g);
  const auto subs = index_two_subgroups(g);
  std::string orders;
  std::size_t cyclic_subs = 0;
  for (const auto& h : subs) {
    orders += (orders.empty() ? "" : ", ") + std::to_string(h.order()) + (is_cyclic(h) ? " (cyclic)" : "");
    cyclic_subs += is_cyclic(h) ? 1 : 0;
  }
  r.facts.emplace_back("conductor", std::to_string(g.field()->conductor()));
  r.facts.emplace_back("order", std::to_string(g.order()));
  r.facts.emplace_back("cyclic", yes_no(cyclic));
  r.facts.emplace_back("abelian", yes_no(abelian));
  r.facts.emplace_back("common eigenvector", yes_no(eigen));
  r.facts.emplace_back("pgl projection order", std::to_string(pgl_projection_order(g)));
  r.facts.emplace_back("index-2 subgroups", std::to_string(subs.size()));
  r.facts.emplace_back("index-2 subgroup orders", orders.empty() ? "none" : orders);
  r.facts.emplace_back("cyclic index-2 subgroups", std::to_string(cyclic_subs));

  const CycloNumber one = CycloNumber::constant(g.field(), 1);
  bool closed = g.contains(Mat2::identity(g.field()));
  for (const auto& x : g.elements()) {
    closed = closed && x.det() == one && g.contains(x.inverse());
    for (const auto& s : g.generators()) closed = closed && g.contains(x * s);
  }
  add_check(r, "closed with identity, inverses and det 1", closed);
  add_check(r, "common eigenvector implies cyclic", !eigen || cyclic, "common eigenvector but not cyclic");
  return r;
}

RunReport cmd_indicial(const std::string& tag) {
  RunReport r{"indicial", tag, {}, {}, 0};
  Timer timer(r);
  const TriangleParameters p = family(tag);
  r.facts.emplace_back("parameters", p.to_string());
  r.facts.emplace_back("q", platonic_q(p).to_string());
  add_obstruction(r, p);
  return r;
}

RunReport cmd_conservation(const std::string& tag, const std::array<double, 3>& start, double t_end, double dt,
                           int order, double tolerance) {
  RunReport r{"conservation", tag, {}, {}, 0};
  Timer timer(r);
  const TriangleParameters p = family(tag);
  if (!(dt > 0) || !(t_end >= 0)) throw UsageError("--dt must be positive and --t-end non-negative");
  if (order < 2) throw UsageError("--order must be at least 2");
  r.facts.emplace_back("start", fmt_double(start[0]) + ", " + fmt_double(start[1]) + ", " + fmt_double(start[2]));
  r.facts.emplace_back("base point", to_string(rationalize(start[0])));
  try {
    const ConservationResult res = numeric_conservation_check(p, start, t_end, dt, order);
    r.facts.emplace_back("steps", std::to_string(res.steps));
    r.facts.emplace_back("window", fmt_double(res.window));
    r.facts.emplace_back("xi(0)", fmt_double(res.xi0));
    r.facts.emplace_back("max drift", fmt_double(res.max_drift));
    add_check(r, "drift <= " + fmt_double(tolerance), res.max_drift <= tolerance, fmt_double(res.max_drift));
  } catch (const MathError& e) {
    add_check(r, "trajectory inside the series window", false, e.what());
  }
  return r;
}

}  // namespace lvf
