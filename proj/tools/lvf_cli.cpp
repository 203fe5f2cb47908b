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


#include <CLI11.hpp>

#include <array>
#include <cstdio>
#include <string>

#include "lvf/lvf.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(lvf_status s, lvf_report* r, bool json) {
  if (s != LVF_OK) {
    std::fprintf(stderr, "lvf: %s: %s\n", lvf_status_name(s), lvf_last_error());
    return s == LVF_ERR_USAGE ? kExitUsage : kExitFail;
  }
  std::fputs(json ? lvf_report_json(r) : lvf_report_text(r), stdout);
  if (json) std::fputc('\n', stdout);
  const int code = lvf_report_all_pass(r) ? 0 : kExitFail;
  lvf_report_free(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Liouvillian first integrals for three-dimensional vector fields"};
  app.set_version_flag("--version", std::string(lvf_version()));
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print the report as JSON");

  std::string tag;
  std::string x0 = "1/2";
  int order = 40;
  auto* verify = app.add_subcommand("verify-family", "Series identities and obstruction for a triangle family");
  verify->add_option("tag", tag, "Family tag: 223, 233, 234, 235 or 22N:<N>")->required();
  verify->add_option("--x0", x0, "Base point as an exact rational p/q")->capture_default_str();
  verify->add_option("--order", order, "Series order")->capture_default_str();

  std::string path;
  auto* check = app.add_subcommand("check", "Check a candidate (omega, alpha) against Omega from a file");
  check->add_option("file", path, "Binding file")->required();

  std::string group;
  auto* facts = app.add_subcommand("group-facts", "Facts about a finite subgroup of SL(2,C)");
  facts->add_option("tag", group, "C:<n>, D:<N>, 2T, 2O or 2I")->required();

  auto* indicial = app.add_subcommand("indicial", "Indicial equations and the rational obstruction");
  indicial->add_option("tag", tag, "Family tag")->required();

  std::array<double, 3> start{0.5, 1.0, 0.0};
  double t_end = 0.3;
  double dt = 1e-3;
  double tolerance = 1e-8;
  auto* conservation = app.add_subcommand("conservation", "Drift of the first integral along an RK4 trajectory");
  conservation->add_option("tag", tag, "Family tag")->required();
  conservation->add_option("--start", start, "Initial point x y z")->expected(3)->capture_default_str();
  conservation->add_option("--t-end", t_end, "Integration time")->capture_default_str();
  conservation->add_option("--dt", dt, "Step size")->capture_default_str();
  conservation->add_option("--order", order, "Series order")->capture_default_str();
  conservation->add_option("--tol", tolerance, "Maximum allowed drift")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  lvf_report* r = nullptr;
  lvf_status s = LVF_OK;
  if (verify->parsed()) {
    s = lvf_verify_family(tag.c_str(), x0.c_str(), order, &r);
  } else if (check->parsed()) {
    s = lvf_check_file(path.c_str(), &r);
  } else if (facts->parsed()) {
    s = lvf_group_facts(group.c_str(), &r);
  } else if (indicial->parsed()) {
    s = lvf_indicial(tag.c_str(), &r);
  } else {
    s = lvf_conservation(tag.c_str(), start.data(), t_end, dt, order, tolerance, &r);
  }
  return emit(s, r, json);
}
