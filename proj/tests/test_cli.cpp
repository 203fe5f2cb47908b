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


#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run lvf(const std::string& args) {
  const std::string cmd = std::string(LVF_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(LVF_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("exit status contract") {
  CHECK(lvf("verify-family 223 --x0 1/2 --order 40").status == 0);
  CHECK(lvf("verify-family 235 --x0 2 --order 40").status == 0);
  CHECK(lvf("verify-family 999").status == 2);
  CHECK(lvf("verify-family 223 --x0 0.5").status == 2);
  CHECK(lvf("verify-family 223 --order abc").status == 2);
  CHECK(lvf("check " + data("d3_bundle.txt")).status == 0);
  CHECK(lvf("check " + data("flat.txt")).status == 0);
  CHECK(lvf("check " + data("not_tangent.txt")).status == 1);
  CHECK(lvf("check /nonexistent/file").status == 2);
  CHECK(lvf("group-facts 2T").status == 0);
  CHECK(lvf("group-facts 3X").status == 2);
  CHECK(lvf("indicial 234").status == 0);
  CHECK(lvf("conservation 223").status == 0);
  CHECK(lvf("conservation 223 --t-end 0.6 --dt 0.01").status == 1);
  CHECK(lvf("conservation 223 --tol 1e-14").status == 1);
  CHECK(lvf("").status == 2);
  CHECK(lvf("--help").status == 0);
}

TEST_CASE("group facts output") {
  const Run r = lvf("group-facts 2T --json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["facts"]["order"] == "24");
  CHECK(j["facts"]["pgl projection order"] == "12");
  CHECK(j["facts"]["index-2 subgroups"] == "0");

  const auto d3 = nlohmann::json::parse(lvf("group-facts D:3 --json").out);
  CHECK(d3["facts"]["order"] == "12");
  CHECK(d3["facts"]["index-2 subgroup orders"] == "6 (cyclic)");

  const auto c1 = nlohmann::json::parse(lvf("--json group-facts C:1").out);
  CHECK(c1["facts"]["order"] == "1");
  CHECK(c1["facts"]["cyclic"] == "yes");
}

TEST_CASE("json schema and determinism") {
  for (const std::string& args : std::vector<std::string>{"verify-family 223 --json", "check " + data("d3_bundle.txt") + " --json", "group-facts 2O --json",
        "indicial 22N:5 --json", "conservation 234 --json"}) {
    CAPTURE(args);
    auto a = nlohmann::json::parse(lvf(args).out);
    auto b = nlohmann::json::parse(lvf(args).out);
    for (const char* key : {"command", "tag", "checks", "facts", "duration_ms"}) CHECK(a.contains(key));
    for (const auto& c : a["checks"]) {
      CHECK(c["name"].is_string());
      CHECK(c["pass"].is_boolean());
      CHECK(c["witness"].is_string());
    }
    a.erase("duration_ms");
    b.erase("duration_ms");
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("missing alpha is reported as defaulted") {
  const auto j = nlohmann::json::parse(lvf("check " + data("flat.txt") + " --json").out);
  CHECK(j["facts"]["alpha"] == "0 (default)");
  CHECK(j["checks"][1]["name"] == "d(omega)-alpha^omega=0");
}
