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

#ifndef RULEDOC_REALIZE_H_
#define RULEDOC_REALIZE_H_

#include <string>
#include <vector>

#include "ruledoc/aggregate.h"
#include "ruledoc/docplan.h"
#include "ruledoc/lexicon.h"

namespace ruledoc {

// E_LEX_MISSING for an absent lexicon entry, E_NO_SUBJECT when a premise
// disjunct does not contain exactly one atom with a SubjectHead entry.
class RealizeError : public Error {
 public:
  RealizeError(std::string code, std::string key, LexRole role,
               std::string lang, std::string section,
               const std::string &message)
      : Error(std::move(code), message),
        key_(std::move(key)),
        role_(role),
        lang_(std::move(lang)),
        section_(std::move(section)) {}

  const std::string &key() const { return key_; }
  LexRole role() const { return role_; }
  const std::string &lang() const { return lang_; }
  const std::string &section() const { return section_; }

 private:
  std::string key_;
  LexRole role_;
  std::string lang_;
  std::string section_;
};

enum class OutputFormat { kMarkdown, kPlain };

struct RealizeOptions {
  // Rotate through synonyms by item index instead of always using the main
  // template.
  bool vary = false;
  OutputFormat format = OutputFormat::kMarkdown;
};

struct RealizedSection {
  std::string heading;
  std::vector<std::string> sentences;
};

struct RealizedDocument {
  std::string language;
  std::vector<RealizedSection> sections;
  std::string rendering;
};

// Clause for a merge group, without terminal punctuation. A CannedClause
// keyed by the group label or an origin label replaces the whole clause; one
// keyed `<label>#premise` replaces the premise phrase of that label's
// disjuncts. Otherwise the clause is the subject head, the disjunct phrases
// joined by the language's "or", and the conclusion verb phrase. Overrides
// never skip lexicon lookups, so coverage gaps always surface.
std::string RealizeClause(const MergeGroup &group, const Lexicon &lex,
                          const LanguageCode &lang, size_t variant = 0);

// Member clauses joined by the language's contrast connective, first clause
// capitalized, one terminal period.
std::string RealizeContrast(const ContrastGroup &group, const Lexicon &lex,
                            const LanguageCode &lang, size_t variant = 0);

// One sentence per plan item. E_LEX_MISSING takes precedence over
// E_NO_SUBJECT across the whole document.
RealizedDocument RealizeDocument(const DocumentPlan &dp, const Lexicon &lex,
                                 const LanguageCode &lang,
                                 const RealizeOptions &options = {});

// Markdown: `## heading`, one sentence per line, blank line between
// sections. Plain drops the `## ` marker. Empty for no sections.
std::string Render(const std::vector<RealizedSection> &sections,
                   OutputFormat format);

}  // namespace ruledoc

#endif  // RULEDOC_REALIZE_H_
