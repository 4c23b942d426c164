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

#ifndef RULEDOC_CLI_H_
#define RULEDOC_CLI_H_

#include <optional>
#include <ostream>
#include <string>

#include "ruledoc/realize.h"

namespace ruledoc::cli {

// Process exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kFindings = 2,
};

struct RunConfig {
  std::string rules_path;
  std::string lexicon_path;
  std::string policy_path;
  std::string facts_path;
  std::string language = "en";
  std::string output_path;
  bool vary = false;
  OutputFormat format = OutputFormat::kMarkdown;
};

// Subcommands. Product output goes to `out` (or the --out file), diagnostics
// to `err`.
int Generate(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int Check(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int Simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int Plan(const RunConfig &cfg, std::ostream &out, std::ostream &err);

// Parses `ruledoc <generate|check|simulate|plan> [flags]` and dispatches.
int Main(int argc, const char *const *argv, std::ostream &out,
         std::ostream &err);

}  // namespace ruledoc::cli

#endif  // RULEDOC_CLI_H_
