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

#ifndef RULEDOC_PRINTER_H_
#define RULEDOC_PRINTER_H_

#include <string>

#include "ruledoc/ast.h"

namespace ruledoc {

// Canonical text form of a rule set. Rules are separated by a blank line and
// each disjunct of a merged rule starts on its own `or` line. The output
// re-parses to a structurally identical RuleSet.
std::string PrintRuleSet(const RuleSet &rs);
std::string PrintRule(const Rule &rule);

}  // namespace ruledoc

#endif  // RULEDOC_PRINTER_H_
