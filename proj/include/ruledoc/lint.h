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

#ifndef RULEDOC_LINT_H_
#define RULEDOC_LINT_H_

#include <string>
#include <vector>

#include "ruledoc/ast.h"

namespace ruledoc {

struct LintFinding {
  enum class Level { kError, kWarning };

  Level level = Level::kError;
  // Finding code, e.g. E_RANGE.
  std::string code;
  std::string label;
  int line = 0;
  std::string message;

  bool is_error() const { return level == Level::kError; }
};

const char *LevelName(LintFinding::Level level);

// Checks range restriction, per-predicate arity, singleton premise variables
// and predicate names that differ only in case. Findings come back in rule
// order.
std::vector<LintFinding> LintRuleSet(const RuleSet &rs);

bool HasErrors(const std::vector<LintFinding> &findings);

}  // namespace ruledoc

#endif  // RULEDOC_LINT_H_
