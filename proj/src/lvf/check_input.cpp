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


#include "lvf/check_input.hpp"

#include <map>
#include <optional>
#include <set>

#include "lvf/descent.hpp"
#include "lvf/parser.hpp"

namespace lvf {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

const std::set<std::string> kFormKeys{"omega.x", "omega.y", "omega.z", "alpha.x", "alpha.y", "alpha.z",
                                      "Omega.p", "Omega.q", "Omega.r", "P",       "Q",       "R"};
const std::set<std::string> kReserved{"x", "y", "z", "t"};

struct Line {
  std::size_t number;
  std::string key;
  std::string expr;
};

template <class C>
class Reader {
 public:
  Reader(std::function<C(const Integer&)> constant, std::function<std::optional<C>(std::string_view)> base)
      : constant_(std::move(constant)), base_(std::move(base)) {}

  C eval(const Line& l) {
    ExpressionAlgebra<C> alg{constant_, [this](std::string_view name) -> std::optional<C> {
                               if (auto v = base_(name)) return v;
                               const auto it = lets_.find(std::string(name));
                               if (it != lets_.end()) return it->second;
                               return std::nullopt;
                             }};
    try {
      return parse_with(l.expr, alg);
    } catch (const ParseError& e) {
      throw InputError(std::string("in '") + l.key + "': " + e.what(), l.number);
    } catch (const MathError& e) {
      throw InputError(std::string("in '") + l.key + "': " + e.what(), l.number);
    }
  }

  CheckForms<C> read(const std::vector<Line>& lines, bool& alpha_defaulted) {
    const C zero = constant_(Integer(0));
    std::map<std::string, C> vals;
    for (const auto& l : lines) {
      C v = eval(l);
      if (kFormKeys.count(l.key)) {
        vals.emplace(l.key, std::move(v));
      } else {
        lets_.insert_or_assign(l.key, std::move(v));
      }
    }
    const auto get = [&](const char* k) {
      const auto it = vals.find(k);
      return it == vals.end() ? zero : it->second;
    };
    const bool vector_field = vals.count("P") || vals.count("Q") || vals.count("R");
    const bool two_form = vals.count("Omega.p") || vals.count("Omega.q") || vals.count("Omega.r");
    if (!vector_field && !two_form) throw InputError("no Omega given (Omega.p/q/r or P/Q/R)", 0);
    alpha_defaulted = !vals.count("alpha.x") && !vals.count("alpha.y") && !vals.count("alpha.z");
    CheckForms<C> f{{get("omega.x"), get("omega.y"), get("omega.z")},
                    {get("alpha.x"), get("alpha.y"), get("alpha.z")},
                    vector_field ? TwoForm<C>{get("P"), get("Q"), get("R")}
                                 : TwoForm<C>{get("Omega.p"), get("Omega.q"), get("Omega.r")}};
    if (f.omega.is_zero()) throw InputError("omega is zero", 0);
    return f;
  }

 private:
  std::function<C(const Integer&)> constant_;
  std::function<std::optional<C>(std::string_view)> base_;
  std::map<std::string, C> lets_;
};

std::optional<RationalFunction> base_variable(std::string_view name) {
  for (Var v : kAllVars) {
    if (var_name(v) == name) return RationalFunction::variable(v);
  }
  return std::nullopt;
}

}  // namespace

CheckProblem parse_check_input(std::string_view text) {
  std::vector<Line> lines;
  std::set<std::string> seen;
  std::optional<std::pair<unsigned, std::string>> ext;
  std::size_t ext_line = 0;
  bool vector_style = false;
  bool two_form_style = false;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('\n', start), text.size());
    std::string line = std::string(text.substr(start, end - start));
    start = end + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("ext:", 0) == 0) {
      if (ext) throw InputError("extension declared twice", number);
      if (!lines.empty()) throw InputError("'ext:' must come before any binding", number);
      const std::string rest = trim(std::string_view(line).substr(4));
      const auto comma = rest.find(',');
      const auto eq = rest.find('=');
      if (comma == std::string::npos || eq == std::string::npos || eq < comma ||
          trim(std::string_view(rest).substr(comma + 1, eq - comma - 1)) != "g") {
        throw InputError("expected 'ext: m, g = <expression>'", number);
      }
      const std::string m = trim(std::string_view(rest).substr(0, comma));
      if (m.empty() || m.size() > 3 || m.find_first_not_of("0123456789") != std::string::npos || std::stoul(m) < 2) {
        throw InputError("extension degree must be an integer >= 2", number);
      }
      ext = std::make_pair(static_cast<unsigned>(std::stoul(m)), trim(std::string_view(rest).substr(eq + 1)));
      ext_line = number;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("expected 'name = expression'", number);
    Line l{number, trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1))};
    if (!kFormKeys.count(l.key) && (!is_identifier(l.key) || kReserved.count(l.key))) {
      throw InputError("unknown binding '" + l.key + "'", number);
    }
    if (!seen.insert(l.key).second) throw InputError("'" + l.key + "' bound twice", number);
    if (l.expr.empty()) throw InputError("empty expression for '" + l.key + "'", number);
    if (l.key == "P" || l.key == "Q" || l.key == "R") vector_style = true;
    if (l.key.rfind("Omega.", 0) == 0) two_form_style = true;
    if (vector_style && two_form_style) {
      throw InputError("give Omega either as Omega.p/q/r or as P/Q/R, not both", number);
    }
    lines.push_back(std::move(l));
  }

  CheckProblem p;
  if (!ext) {
    Reader<RationalFunction> r([](const Integer& n) { return RationalFunction(Rational(n)); }, base_variable);
    p.forms = r.read(lines, p.alpha_defaulted);
    return p;
  }
  Reader<RationalFunction> base_reader([](const Integer& n) { return RationalFunction(Rational(n)); }, base_variable);
  const RationalFunction g = base_reader.eval({ext_line, "g", ext->second});
  if (g.is_zero()) throw InputError("extension generator g is zero", ext_line);
  p.ctx = make_radical_context(ext->first, g);
  const auto ctx = p.ctx;
  Reader<RadicalFunction> r([ctx](const Integer& n) { return radical_embed(ctx, RationalFunction(Rational(n))); },
                            [ctx](std::string_view name) -> std::optional<RadicalFunction> {
                              if (name == "t") return radical_generator(ctx);
                              if (auto v = base_variable(name)) return radical_embed(ctx, *v);
                              return std::nullopt;
                            });
  p.forms = r.read(lines, p.alpha_defaulted);
  return p;
}

VerificationReport run_check(const CheckProblem& problem) {
  return std::visit([](const auto& f) { return check_probsetup(f.omega, f.alpha, f.Omega); }, problem.forms);
}

}  // namespace lvf
