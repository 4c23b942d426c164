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

#ifndef RULEDOC_LEXICON_H_
#define RULEDOC_LEXICON_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ruledoc/ast.h"
#include "ruledoc/error.h"

namespace ruledoc {

class LexiconError : public Error {
 public:
  explicit LexiconError(const std::string &message)
      : Error("E_LEXICON", message) {}
};

// Registered output languages.
class LanguageCode {
 public:
  // Throws LexiconError for codes other than "en" and "de".
  static LanguageCode Parse(std::string_view code);
  static bool IsRegistered(std::string_view code);

  const std::string &str() const { return code_; }

  friend auto operator<=>(const LanguageCode &, const LanguageCode &) = default;

 private:
  explicit LanguageCode(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

enum class LexRole {
  kSubjectHead,
  kPremiseModifier,
  kConclusionVerbPhrase,
  kConstantPhrase,
  kCannedClause,
};

const char *RoleName(LexRole role);
std::optional<LexRole> ParseRole(std::string_view name);

// Linguistic metadata for one key in one role.
// Templates use numbered slots `{0}`, `{1}` for argument positions.
struct LexEntry {
  std::string key;
  LexRole role = LexRole::kConstantPhrase;
  size_t arity = 0;
  std::map<std::string, std::string> templates;
  std::map<std::string, std::vector<std::string>> synonyms;

  // Template at `variant` in the rotation [template, synonyms...]; the
  // rotation wraps around.
  const std::string &Variant(const LanguageCode &lang, size_t variant) const;
  size_t VariantCount(const LanguageCode &lang) const;
};

// A template split into literal text and slot references.
struct TemplatePiece {
  bool is_slot = false;
  size_t slot = 0;
  std::string text;
};
std::vector<TemplatePiece> SplitTemplate(std::string_view tmpl);
// Slot indices referenced by a template, ascending and deduplicated.
std::set<size_t> TemplateSlots(std::string_view tmpl);

class Lexicon {
 public:
  Lexicon() = default;

  // Validates and inserts an entry. Throws LexiconError when the entry
  // breaks an invariant (duplicate key/role, slot out of range, missing or
  // empty template for a declared language, undeclared language).
  void Add(LexEntry entry);
  void DeclareLanguage(const LanguageCode &lang) { languages_.insert(lang); }
  bool Remove(const std::string &key, LexRole role);

  const LexEntry *Find(const std::string &key, LexRole role) const;
  // As above, but only when the entry has a template for `lang`.
  const LexEntry *Find(const std::string &key, LexRole role,
                       const LanguageCode &lang) const;
  bool Has(const std::string &key, LexRole role) const {
    return Find(key, role) != nullptr;
  }
  bool Declares(const LanguageCode &lang) const {
    return languages_.count(lang) > 0;
  }
  bool Declares(std::string_view code) const;

  const std::set<LanguageCode> &languages() const { return languages_; }
  const std::map<std::pair<std::string, LexRole>, LexEntry> &entries() const {
    return entries_;
  }
  size_t size() const { return entries_.size(); }

 private:
  std::set<LanguageCode> languages_;
  std::map<std::pair<std::string, LexRole>, LexEntry> entries_;
};

// Parses a `.lex.json` document:
//
//   { "languages": ["en", "de"],
//     "entries": [ { "key": "giveDiscount", "arity": 2,
//                    "role": "ConclusionVerbPhrase",
//                    "templates": { "en": "obtain a discount of {0}", ... },
//                    "synonyms": { "en": [] } }, ... ] }
Lexicon LoadLexicon(std::string_view text);

// A lexicon entry the realizer needs but the lexicon lacks.
struct MissingEntry {
  std::string key;
  LexRole role;
  std::string lang;

  friend bool operator==(const MissingEntry &, const MissingEntry &) = default;
};

std::string ToString(const MissingEntry &m);

// Lexicon lookups required to realize `rs` in `lang`, minus those present.
// Per rule: a PremiseModifier for every premise atom whose predicate has no
// SubjectHead entry, the ConclusionVerbPhrase of the conclusion, and a
// ConstantPhrase for every constant argument of those atoms. The set does
// not depend on template contents, so adding an entry never grows it. Canned
// overrides do not waive anything. Each (key, role) is listed once, in
// first-need order.
std::vector<MissingEntry> Coverage(const Lexicon &lex, const RuleSet &rs,
                                   const LanguageCode &lang);
std::vector<MissingEntry> Coverage(const Lexicon &lex,
                                   const std::vector<const Rule *> &rules,
                                   const LanguageCode &lang);

}  // namespace ruledoc

#endif  // RULEDOC_LEXICON_H_
