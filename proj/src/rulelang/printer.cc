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

#include "ruledoc/printer.h"

namespace ruledoc {

std::string PrintRule(const Rule &rule) {
  std::string out = "<" + rule.label + ">\n";
  for (size_t i = 0; i < rule.premises.size(); ++i) {
    out += i == 0 ? "  if " : "  or ";
    out += ToString(rule.premises[i]);
    out += '\n';
  }
  out += "  then " + ToString(rule.conclusion) + ";\n";
  return out;
}

std::string PrintRuleSet(const RuleSet &rs) {
  std::string out;
  for (size_t i = 0; i < rs.rules.size(); ++i) {
    if (i > 0) out += '\n';
    out += PrintRule(rs.rules[i]);
  }
  return out;
}

}  // namespace ruledoc
