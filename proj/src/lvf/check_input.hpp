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


#ifndef LVF_CHECK_INPUT_HPP
#define LVF_CHECK_INPUT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "lvf/forms.hpp"
#include "lvf/radical.hpp"

namespace lvf {

/// Malformed check file; line is 1-based (0 when not tied to a line).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

template <class C>
struct CheckForms {
  OneForm<C> omega;
  OneForm<C> alpha;
  TwoForm<C> Omega;
};

struct CheckProblem {
  /// Null unless the file declares "ext: m, g = ...".
  RadicalContextPtr ctx;
  std::variant<CheckForms<RationalFunction>, CheckForms<RadicalFunction>> forms;
  bool alpha_defaulted = false;
};

/// Reads a check file:
///
///   # comment
///   ext: 2, g = x*(x-1)          optional; makes t with t^m = g available
///   h = (3*(2*x-1) + 2*t)/(12*x*(x-1))    let binding, usable below
///   omega.x = 1 - q*z + y*h
///   alpha.x = -h
///   Omega.p = 1                  or P = 1 (vector-field components)
///
/// Missing components are 0, alpha defaults to 0. Throws InputError for
/// unknown or repeated keys, parse errors, an all-zero omega or no Omega.
CheckProblem parse_check_input(std::string_view text);

VerificationReport run_check(const CheckProblem& problem);

}  // namespace lvf

#endif  // LVF_CHECK_INPUT_HPP
