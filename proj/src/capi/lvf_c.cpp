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


#include "lvf/lvf.h"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "lvf/commands.hpp"
#include "lvf/rational.hpp"

struct lvf_report {
  lvf::RunReport report;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

lvf_status fail(lvf_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class F>
lvf_status run(lvf_report** out, F&& body) {
  if (out == nullptr) return fail(LVF_ERR_NULL, "null output handle");
  *out = nullptr;
  try {
    auto* r = new lvf_report{body(), {}, {}};
    r->text = r->report.to_text();
    r->json = r->report.to_json();
    *out = r;
    g_last_error.clear();
    return LVF_OK;
  } catch (const lvf::UsageError& e) {
    return fail(LVF_ERR_USAGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(LVF_ERR_USAGE, e.what());
  } catch (const lvf::MathError& e) {
    return fail(LVF_ERR_MATH, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LVF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LVF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LVF_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* lvf_version(void) { return "0.1.0"; }

const char* lvf_last_error(void) { return g_last_error.c_str(); }

const char* lvf_status_name(lvf_status s) {
  switch (s) {
    case LVF_OK: return "ok";
    case LVF_ERR_USAGE: return "usage error";
    case LVF_ERR_NULL: return "null argument";
    case LVF_ERR_MATH: return "math error";
    case LVF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

lvf_status lvf_verify_family(const char* tag, const char* x0, int order, lvf_report** out) {
  if (tag == nullptr || x0 == nullptr) return fail(LVF_ERR_NULL, "null argument");
  return run(out, [&] { return lvf::cmd_verify_family(tag, x0, order); });
}

lvf_status lvf_check_text(const char* text, lvf_report** out) {
  if (text == nullptr) return fail(LVF_ERR_NULL, "null argument");
  return run(out, [&] { return lvf::cmd_check_text(text); });
}

lvf_status lvf_check_file(const char* path, lvf_report** out) {
  if (path == nullptr) return fail(LVF_ERR_NULL, "null argument");
  return run(out, [&] { return lvf::cmd_check_file(path); });
}

lvf_status lvf_group_facts(const char* tag, lvf_report** out) {
  if (tag == nullptr) return fail(LVF_ERR_NULL, "null argument");
  return run(out, [&] { return lvf::cmd_group_facts(tag); });
}

lvf_status lvf_indicial(const char* tag, lvf_report** out) {
  if (tag == nullptr) return fail(LVF_ERR_NULL, "null argument");
  return run(out, [&] { return lvf::cmd_indicial(tag); });
}

lvf_status lvf_conservation(const char* tag, const double start[3], double t_end, double dt, int order,
                            double tolerance, lvf_report** out) {
  if (tag == nullptr || start == nullptr) return fail(LVF_ERR_NULL, "null argument");
  return run(out, [&] {
    return lvf::cmd_conservation(tag, {start[0], start[1], start[2]}, t_end, dt, order, tolerance);
  });
}

void lvf_report_free(lvf_report* r) { delete r; }

int lvf_report_all_pass(const lvf_report* r) { return r != nullptr && r->report.all_pass() ? 1 : 0; }

double lvf_report_duration_ms(const lvf_report* r) { return r ? r->report.duration_ms : 0.0; }

size_t lvf_report_check_count(const lvf_report* r) { return r ? r->report.checks.size() : 0; }

lvf_status lvf_report_check(const lvf_report* r, size_t i, const char** name, int* pass, const char** witness) {
  if (r == nullptr) return fail(LVF_ERR_NULL, "null report");
  if (i >= r->report.checks.size()) return fail(LVF_ERR_USAGE, "check index out of range");
  const auto& c = r->report.checks[i];
  if (name) *name = c.name.c_str();
  if (pass) *pass = c.pass ? 1 : 0;
  if (witness) *witness = c.witness.c_str();
  return LVF_OK;
}

size_t lvf_report_fact_count(const lvf_report* r) { return r ? r->report.facts.size() : 0; }

lvf_status lvf_report_fact(const lvf_report* r, size_t i, const char** key, const char** value) {
  if (r == nullptr) return fail(LVF_ERR_NULL, "null report");
  if (i >= r->report.facts.size()) return fail(LVF_ERR_USAGE, "fact index out of range");
  const auto& f = r->report.facts[i];
  if (key) *key = f.first.c_str();
  if (value) *value = f.second.c_str();
  return LVF_OK;
}

const char* lvf_report_text(const lvf_report* r) { return r ? r->text.c_str() : ""; }

const char* lvf_report_json(const lvf_report* r) { return r ? r->json.c_str() : ""; }

}  // extern "C"
