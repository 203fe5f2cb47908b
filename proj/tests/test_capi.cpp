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

#include <string>
#include <thread>

#include <json.hpp>

#include "lvf/lvf.h"

namespace {

struct Report {
  lvf_report* r = nullptr;
  ~Report() { lvf_report_free(r); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(lvf_version()) == "0.1.0");
  CHECK(std::string(lvf_status_name(LVF_OK)) == "ok");
  CHECK(std::string(lvf_status_name(LVF_ERR_USAGE)) == "usage error");
}

TEST_CASE("verify-family through the C API") {
  Report h;
  REQUIRE(lvf_verify_family("223", "1/2", 40, &h.r) == LVF_OK);
  CHECK(lvf_report_all_pass(h.r) == 1);
  CHECK(lvf_report_check_count(h.r) == 17);
  const char* name = nullptr;
  int pass = 0;
  const char* witness = nullptr;
  REQUIRE(lvf_report_check(h.r, 0, &name, &pass, &witness) == LVF_OK);
  CHECK(std::string(name) == "series: wronskian=1");
  CHECK(pass == 1);
  CHECK(std::string(witness).empty());
  CHECK(lvf_report_check(h.r, 17, &name, &pass, &witness) == LVF_ERR_USAGE);
  CHECK(lvf_report_duration_ms(h.r) >= 0.0);

  const auto j = nlohmann::json::parse(lvf_report_json(h.r));
  CHECK(j["command"] == "verify-family");
  CHECK(j["tag"] == "223");
  CHECK(j["checks"].size() == 17);
  CHECK(j["facts"]["x0"] == "1/2");
  CHECK(j.contains("duration_ms"));
}

TEST_CASE("group facts through the C API") {
  Report h;
  REQUIRE(lvf_group_facts("2T", &h.r) == LVF_OK);
  std::string order;
  std::string proj;
  std::string index2;
  for (size_t i = 0; i < lvf_report_fact_count(h.r); ++i) {
    const char* k = nullptr;
    const char* v = nullptr;
    REQUIRE(lvf_report_fact(h.r, i, &k, &v) == LVF_OK);
    if (std::string(k) == "order") order = v;
    if (std::string(k) == "pgl projection order") proj = v;
    if (std::string(k) == "index-2 subgroups") index2 = v;
  }
  CHECK(order == "24");
  CHECK(proj == "12");
  CHECK(index2 == "0");
}

TEST_CASE("check text with a failing condition is still a report") {
  Report h;
  REQUIRE(lvf_check_text("omega.x = 1\nOmega.p = 1\n", &h.r) == LVF_OK);
  CHECK(lvf_report_all_pass(h.r) == 0);
  const char* witness = nullptr;
  int pass = 1;
  REQUIRE(lvf_report_check(h.r, 0, nullptr, &pass, &witness) == LVF_OK);
  CHECK(pass == 0);
  CHECK(std::string(witness) == "dx^dy^dz");
}

TEST_CASE("errors leave no handle and set the message") {
  lvf_report* r = reinterpret_cast<lvf_report*>(0x1);
  CHECK(lvf_verify_family("999", "1/2", 40, &r) == LVF_ERR_USAGE);
  CHECK(r == nullptr);
  CHECK(std::string(lvf_last_error()).find("(9,9,9)") != std::string::npos);
  CHECK(lvf_group_facts("D:1", &r) == LVF_ERR_USAGE);
  CHECK(lvf_check_text("omega.x = 0\nP = 1\n", &r) == LVF_ERR_USAGE);
  CHECK(std::string(lvf_last_error()).find("omega is zero") != std::string::npos);
  CHECK(lvf_check_file("/nonexistent/lvf.txt", &r) == LVF_ERR_USAGE);
  CHECK(lvf_verify_family(nullptr, "1/2", 40, &r) == LVF_ERR_NULL);
  CHECK(lvf_indicial("223", nullptr) == LVF_ERR_NULL);
  const double start[3] = {0.5, 1.0, 0.0};
  CHECK(lvf_conservation("223", start, 0.3, 0.0, 40, 1e-8, &r) == LVF_ERR_USAGE);
  CHECK(lvf_report_check_count(nullptr) == 0);
  lvf_report_free(nullptr);
}

TEST_CASE("last error is per thread") {
  lvf_report* r = nullptr;
  CHECK(lvf_indicial("999", &r) == LVF_ERR_USAGE);
  const std::string here = lvf_last_error();
  std::string there;
  std::thread t([&] {
    Report h;
    CHECK(lvf_indicial("223", &h.r) == LVF_OK);
    there = lvf_last_error();
  });
  t.join();
  CHECK(there.empty());
  CHECK(std::string(lvf_last_error()) == here);
}
