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

#include "ruledoc/cli.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "ruledoc/aggregate.h"
#include "ruledoc/docplan.h"
#include "ruledoc/engine.h"
#include "ruledoc/lexicon.h"
#include "ruledoc/lint.h"
#include "ruledoc/parser.h"

namespace ruledoc::cli {
namespace {

// Failure that maps to an exit code after its message has been printed.
struct Exit {
  int code;
};

std::string ReadFile(const std::string &path, std::ostream &err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    throw Exit{kInputError};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RuleSet LoadRules(const RunConfig &cfg, std::ostream &err) {
  if (cfg.rules_path.empty()) {
    err << "error: --rules is required\n";
    throw Exit{kInputError};
  }
  const std::string text = ReadFile(cfg.rules_path, err);
  try {
    return ParseRuleSet(text);
  } catch (const ParseError &e) {
    err << cfg.rules_path << ":" << e.what() << "\n";
    throw Exit{kInputError};
  }
}

Lexicon LoadLexiconFile(const RunConfig &cfg, std::ostream &err) {
  if (cfg.lexicon_path.empty()) {
    err << "error: --lexicon is required\n";
    throw Exit{kInputError};
  }
  const std::string text = ReadFile(cfg.lexicon_path, err);
  try {
    return LoadLexicon(text);
  } catch (const LexiconError &e) {
    err << cfg.lexicon_path << ": " << e.what() << "\n";
    throw Exit{kInputError};
  }
}

// Writes product output to --out when given, otherwise to `out`.
void Emit(const RunConfig &cfg, const std::string &text, std::ostream &out,
          std::ostream &err) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write '" << cfg.output_path << "'\n";
    throw Exit{kInputError};
  }
}

std::string Location(const RunConfig &cfg, int line) {
  return line > 0 ? cfg.rules_path + ":" + std::to_string(line) : cfg.rules_path;
}

// Prints error-level lint findings; returns true if there were any.
bool ReportLintErrors(const RunConfig &cfg, const RuleSet &rs,
                      std::ostream &err) {
  bool any = false;
  for (const LintFinding &f : LintRuleSet(rs)) {
    if (!f.is_error()) continue;
    err << Location(cfg, f.line) << ": " << f.code << ": " << f.message << "\n";
    any = true;
  }
  return any;
}

template <typename Fn>
int Guard(Fn fn) {
  try {
    return fn();
  } catch (const Exit &e) {
    return e.code;
  }
}

}  // namespace

int Generate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  return Guard([&] {
    const RuleSet rs = LoadRules(cfg, err);
    const Lexicon lex = LoadLexiconFile(cfg, err);
    if (!lex.Declares(cfg.language)) {
      err << "error: language " << cfg.language
          << " not declared in lexicon\n";
      return int{kInputError};
    }
    const LanguageCode lang = LanguageCode::Parse(cfg.language);
    SelectionPolicy policy;
    if (!cfg.policy_path.empty()) {
      try {
        policy = LoadPolicy(ReadFile(cfg.policy_path, err));
      } catch (const PlanError &e) {
        err << cfg.policy_path << ": " << e.what() << "\n";
        return int{kInputError};
      }
    }
    if (ReportLintErrors(cfg, rs, err)) return int{kFindings};

    DocumentPlan dp;
    try {
      dp = PlanDocument(BuildPlan(rs), policy);
    } catch (const PlanError &e) {
      err << cfg.policy_path << ": " << e.code() << ": " << e.what() << "\n";
      return int{kInputError};
    }

    std::vector<const Rule *> used;
    for (const Section &s : dp.sections) {
      for (const PlanGroup &g : s.items) {
        if (const auto *m = std::get_if<MergeGroup>(&g)) {
          used.push_back(&m->merged);
        } else {
          for (const MergeGroup &member : std::get<ContrastGroup>(g).members)
            used.push_back(&member.merged);
        }
      }
    }
    const std::vector<MissingEntry> gaps = Coverage(lex, used, lang);
    if (!gaps.empty()) {
      for (const MissingEntry &m : gaps) {
        err << "missing lexicon entry: " << ToString(m) << "\n";
      }
      return int{kFindings};
    }

    RealizeOptions options;
    options.vary = cfg.vary;
    options.format = cfg.format;
    try {
      Emit(cfg, RealizeDocument(dp, lex, lang, options).rendering, out, err);
    } catch (const RealizeError &e) {
      err << "error: " << e.code() << ": " << e.what() << "\n";
      return int{kFindings};
    }
    return int{kOk};
  });
}

int Check(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  return Guard([&] {
    const RuleSet rs = LoadRules(cfg, err);
    std::optional<Lexicon> lex;
    if (!cfg.lexicon_path.empty()) lex = LoadLexiconFile(cfg, err);

    std::string report;
    bool errors = false;
    for (const LintFinding &f : LintRuleSet(rs)) {
      report += std::string(LevelName(f.level)) + "\t" + f.code + "\t" +
                Location(cfg, f.line) + "\t" + f.message + "\n";
      errors = errors || f.is_error();
    }
    if (lex) {
      for (const LanguageCode &lang : lex->languages()) {
        for (const MissingEntry &m : Coverage(*lex, rs, lang)) {
          report += std::string("ERROR\tE_LEX_MISSING\t") + cfg.lexicon_path +
                    "\tmissing entry '" + m.key + "' (" + RoleName(m.role) +
                    ") for language '" + m.lang + "'\n";
          errors = true;
        }
      }
    }
    Emit(cfg, report, out, err);
    return errors ? int{kFindings} : int{kOk};
  });
}

int Simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  return Guard([&] {
    const RuleSet rs = LoadRules(cfg, err);
    if (cfg.facts_path.empty()) {
      err << "error: --facts is required\n";
      return int{kInputError};
    }
    FactBase fb;
    try {
      for (Atom &a : ParseFacts(ReadFile(cfg.facts_path, err))) {
        fb.Insert(std::move(a));
      }
    } catch (const ParseError &e) {
      err << cfg.facts_path << ":" << e.what() << "\n";
      return int{kInputError};
    }
    if (ReportLintErrors(cfg, rs, err)) return int{kFindings};

    Saturation result;
    try {
      result = Saturate(rs, fb);
    } catch (const EngineError &e) {
      err << "error: " << e.code() << ": " << e.what() << "\n";
      return int{kFindings};
    }
    std::string text;
    for (const Atom &a : result.facts) {
      if (!fb.Contains(a)) text += ToString(a) + "\n";
    }
    for (const Derivation &d : result.derivations) {
      text += "# via <" + d.rule_label + "> disjunct " +
              std::to_string(d.disjunct_index) + " {";
      bool first = true;
      for (const auto &[var, value] : d.substitution) {
        if (!first) text += ", ";
        text += "?" + var + "=" + value;
        first = false;
      }
      text += "} -> " + ToString(d.conclusion) + "\n";
    }
    Emit(cfg, text, out, err);
    return int{kOk};
  });
}

int Plan(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  return Guard([&] {
    const RuleSet rs = LoadRules(cfg, err);
    Emit(cfg, DescribePlan(BuildPlan(rs)), out, err);
    return int{kOk};
  });
}

int Main(int argc, const char *const *argv, std::ostream &out,
         std::ostream &err) {
  CLI::App app{"Generate natural-language documentation from business rules",
               "ruledoc"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "markdown";

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--rules", cfg.rules_path, "Rule file (.rules)")->required();
    sub->add_option("--out", cfg.output_path, "Write output to this file");
  };

  CLI::App *generate = app.add_subcommand("generate", "Write documentation");
  add_common(generate);
  generate->add_option("--lexicon", cfg.lexicon_path, "Lexicon (.lex.json)")
      ->required();
  generate->add_option("--policy", cfg.policy_path, "Selection policy (.policy.json)");
  generate->add_option("--lang", cfg.language, "Output language code");
  generate->add_flag("--vary", cfg.vary, "Rotate through lexicon synonyms");
  generate->add_option("--format", format, "markdown or plain")
      ->check(CLI::IsMember({"markdown", "plain"}));

  CLI::App *check = app.add_subcommand("check", "Lint rules and lexicon coverage");
  add_common(check);
  check->add_option("--lexicon", cfg.lexicon_path, "Lexicon (.lex.json)");

  CLI::App *simulate = app.add_subcommand("simulate", "Forward-chain over facts");
  add_common(simulate);
  simulate->add_option("--facts", cfg.facts_path, "Facts file (.facts)")->required();

  CLI::App *plan = app.add_subcommand("plan", "Show the aggregation plan");
  add_common(plan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kInputError};
  }
  cfg.format = format == "plain" ? OutputFormat::kPlain : OutputFormat::kMarkdown;

  if (generate->parsed()) return Generate(cfg, out, err);
  if (check->parsed()) return Check(cfg, out, err);
  if (simulate->parsed()) return Simulate(cfg, out, err);
  return Plan(cfg, out, err);
}

}  // namespace ruledoc::cli
