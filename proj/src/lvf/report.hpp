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


#ifndef LVF_REPORT_HPP
#define LVF_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace lvf {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Canonical print of the nonzero residual for a failing check, empty
  /// otherwise.
  std::string witness;
};

/// Ordered list of named exact checks.
class VerificationReport {
 public:
  void add(std::string name, bool pass, std::string witness = {}) {
    if (!pass && witness.empty()) witness = "(no witness)";
    checks_.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
  }

  /// Appends another report, prefixing its check names.
  void append(const VerificationReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.pass, c.witness});
  }

  [[nodiscard]] const std::vector<CheckResult>& checks() const { return checks_; }
  [[nodiscard]] bool all_pass() const {
    for (const auto& c : checks_) {
      if (!c.pass) return false;
    }
    return true;
  }
  [[nodiscard]] const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace lvf

#endif  // LVF_REPORT_HPP
