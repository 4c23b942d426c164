// Copyright 2026 The ruledoc Authors.
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

#include "ruledoc/lint.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace ruledoc {
namespace {

std::string Lower(std::string s) {
  for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool Mentions(const Conjunction &conj, const std::string &var) {
  for (const Atom &a : conj.atoms) {
    for (const Term &t : a.args) {
      if (t.is_variable() && t.name == var) return true;
    }
  }
  return false;
}

}  // namespace

const char *LevelName(LintFinding::Level level) {
  return level == LintFinding::Level::kError ? "ERROR" : "WARNING";
}

bool HasErrors(const std::vector<LintFinding> &findings) {
  return std::any_of(findings.begin(), findings.end(),
                     [](const LintFinding &f) { return f.is_error(); });
}

std::vector<LintFinding> LintRuleSet(const RuleSet &rs) {
  std::vector<LintFinding> findings;
  auto add = [&](LintFinding::Level level, const char *code, const Rule &r,
                 std::string message) {
    findings.push_back({level, code, r.label, r.line, std::move(message)});
  };

  // First arity seen per predicate, and first spelling per lowercased name.
  std::map<std::string, size_t> arity;
  std::map<std::string, std::string> spelling;
  std::set<std::string> reported_arity;
  std::set<std::string> reported_case;

  for (const Rule &r : rs.rules) {
    std::vector<const Atom *> atoms;
    for (const Conjunction &c : r.premises) {
      for (const Atom &a : c.atoms) atoms.push_back(&a);
    }
    atoms.push_back(&r.conclusion);

    for (const Atom *a : atoms) {
      auto [it, fresh] = arity.emplace(a->predicate, a->arity());
      if (!fresh && it->second != a->arity() &&
          reported_arity.insert(a->predicate).second) {
        add(LintFinding::Level::kError, "E_ARITY", r,
            "predicate '" + a->predicate + "' used with arity " +
                std::to_string(a->arity()) + " but earlier with arity " +
                std::to_string(it->second));
      }
      auto [sp, new_name] = spelling.emplace(Lower(a->predicate), a->predicate);
      if (!new_name && sp->second != a->predicate &&
          reported_case.insert(a->predicate).second) {
        add(LintFinding::Level::kWarning, "W_CASE", r,
            "predicate '" + a->predicate + "' differs only in case from '" +
                sp->second + "'");
      }
    }

    std::vector<std::string> head_vars;
    CollectVariables(r.conclusion, &head_vars);
    for (const std::string &v : head_vars) {
      for (size_t d = 0; d < r.premises.size(); ++d) {
        if (Mentions(r.premises[d], v)) continue;
        std::string where = r.premises.size() == 1
                                ? "the premises"
                                : "premise disjunct " + std::to_string(d);
        add(LintFinding::Level::kError, "E_RANGE", r,
            "rule <" + r.label + ">: conclusion variable ?" + v +
                " does not occur in " + where);
        break;
      }
    }

    for (const Conjunction &c : r.premises) {
      std::map<std::string, int> count;
      std::vector<std::string> order;
      for (const Atom &a : c.atoms) {
        for (const Term &t : a.args) {
          if (!t.is_variable()) continue;
          if (count[t.name]++ == 0) order.push_back(t.name);
        }
      }
      for (const std::string &v : order) {
        if (count[v] != 1) continue;
        if (std::find(head_vars.begin(), head_vars.end(), v) != head_vars.end())
          continue;
        add(LintFinding::Level::kWarning, "W_UNUSED_VAR", r,
            "rule <" + r.label + ">: variable ?" + v + " occurs only once");
      }
    }
  }
  return findings;
}

}  // namespace ruledoc
