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


#ifndef LVF_COMMANDS_HPP
#define LVF_COMMANDS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lvf/report.hpp"

namespace lvf {

/// Bad tag, bad option value or unreadable input; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string command;
  std::string tag;
  std::vector<CheckResult> checks;
  /// Ordered key/value facts; values are exact strings.
  std::vector<std::pair<std::string, std::string>> facts;
  double duration_ms = 0;

  [[nodiscard]] bool all_pass() const;
  /// 0 when every check passes, 1 otherwise.
  [[nodiscard]] int exit_code() const { return all_pass() ? 0 : 1; }
  /// {command, tag, checks: [{name, pass, witness}], facts: {...}, duration_ms}
  [[nodiscard]] std::string to_json() const;
  [[nodiscard]] std::string to_text() const;
};

/// Series identities, the indicial obstruction and, for (2,2,3), the exact
/// D3 bundle and the h1 cross-check.
RunReport cmd_verify_family(const std::string& tag, const std::string& x0, int order);
RunReport cmd_check_text(const std::string& text, const std::string& label = "-");
RunReport cmd_check_file(const std::string& path);
RunReport cmd_group_facts(const std::string& tag);
RunReport cmd_indicial(const std::string& tag);
RunReport cmd_conservation(const std::string& tag, const std::array<double, 3>& start, double t_end, double dt,
                           int order, double tolerance);

}  // namespace lvf

#endif  // LVF_COMMANDS_HPP
