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

#include "ruledoc/lexicon.h"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace ruledoc {

namespace {

constexpr std::string_view kRegisteredLanguages[] = {"en", "de"};

struct RoleNameEntry {
  LexRole role;
  const char *name;
};

constexpr RoleNameEntry kRoleNames[] = {
    {LexRole::kSubjectHead, "SubjectHead"},
    {LexRole::kPremiseModifier, "PremiseModifier"},
    {LexRole::kConclusionVerbPhrase, "ConclusionVerbPhrase"},
    {LexRole::kConstantPhrase, "ConstantPhrase"},
    {LexRole::kCannedClause, "CannedClause"},
};

std::string Describe(const LexEntry &e) {
  return "entry '" + e.key + "' (" + RoleName(e.role) + ")";
}

}  // namespace

LanguageCode LanguageCode::Parse(std::string_view code) {
  if (!IsRegistered(code)) {
    throw LexiconError("unknown language code '" + std::string(code) + "'");
  }
  return LanguageCode(std::string(code));
}

bool LanguageCode::IsRegistered(std::string_view code) {
  return std::find(std::begin(kRegisteredLanguages),
                   std::end(kRegisteredLanguages),
                   code) != std::end(kRegisteredLanguages);
}

const char *RoleName(LexRole role) {
  for (const auto &r : kRoleNames) {
    if (r.role == role) return r.name;
  }
  return "?";
}

std::optional<LexRole> ParseRole(std::string_view name) {
  for (const auto &r : kRoleNames) {
    if (name == r.name) return r.role;
  }
  return std::nullopt;
}

std::vector<TemplatePiece> SplitTemplate(std::string_view tmpl) {
  std::vector<TemplatePiece> pieces;
  std::string literal;
  size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      size_t j = i + 1;
      while (j < tmpl.size() && std::isdigit(static_cast<unsigned char>(tmpl[j])))
        ++j;
      if (j > i + 1 && j < tmpl.size() && tmpl[j] == '}') {
        if (!literal.empty()) {
          pieces.push_back({false, 0, std::move(literal)});
          literal.clear();
        }
        size_t slot = std::stoul(std::string(tmpl.substr(i + 1, j - i - 1)));
        pieces.push_back({true, slot, {}});
        i = j + 1;
        continue;
      }
    }
    literal += tmpl[i++];
  }
  if (!literal.empty()) pieces.push_back({false, 0, std::move(literal)});
  return pieces;
}

std::set<size_t> TemplateSlots(std::string_view tmpl) {
  std::set<size_t> slots;
  for (const TemplatePiece &p : SplitTemplate(tmpl)) {
    if (p.is_slot) slots.insert(p.slot);
  }
  return slots;
}

const std::string &LexEntry::Variant(const LanguageCode &lang,
                                     size_t variant) const {
  const std::string &main = templates.at(lang.str());
  auto it = synonyms.find(lang.str());
  if (it == synonyms.end() || it->second.empty()) return main;
  size_t k = variant % (it->second.size() + 1);
  return k == 0 ? main : it->second[k - 1];
}

size_t LexEntry::VariantCount(const LanguageCode &lang) const {
  auto it = synonyms.find(lang.str());
  return 1 + (it == synonyms.end() ? 0 : it->second.size());
}

bool Lexicon::Declares(std::string_view code) const {
  return LanguageCode::IsRegistered(code) &&
         Declares(LanguageCode::Parse(code));
}

void Lexicon::Add(LexEntry entry) {
  if (entry.key.empty()) throw LexiconError("entry with empty key");
  if ((entry.role == LexRole::kConstantPhrase ||
       entry.role == LexRole::kCannedClause) &&
      entry.arity != 0) {
    throw LexiconError(Describe(entry) + " must have arity 0");
  }
  auto check_language = [&](const std::string &code) {
    if (!LanguageCode::IsRegistered(code)) {
      throw LexiconError(Describe(entry) + ": unknown language code '" +
                         code + "'");
    }
    if (!Declares(LanguageCode::Parse(code))) {
      throw LexiconError(Describe(entry) + ": language '" + code +
                         "' is not declared");
    }
  };
  auto check_slots = [&](const std::string &tmpl) {
    for (size_t slot : TemplateSlots(tmpl)) {
      if (slot >= entry.arity) {
        throw LexiconError(Describe(entry) + ": slot {" +
                           std::to_string(slot) + "} exceeds arity " +
                           std::to_string(entry.arity));
      }
    }
  };
  for (const auto &[code, tmpl] : entry.templates) {
    check_language(code);
    if (tmpl.empty()) {
      throw LexiconError(Describe(entry) + ": empty template for '" + code +
                         "'");
    }
    check_slots(tmpl);
  }
  for (const LanguageCode &lang : languages_) {
    if (entry.templates.count(lang.str()) == 0) {
      throw LexiconError(Describe(entry) + ": no template for '" +
                         lang.str() + "'");
    }
  }
  for (const auto &[code, list] : entry.synonyms) {
    check_language(code);
    for (const std::string &syn : list) {
      if (syn.empty()) {
        throw LexiconError(Describe(entry) + ": empty synonym for '" + code +
                           "'");
      }
      check_slots(syn);
    }
  }
  auto key = std::make_pair(entry.key, entry.role);
  if (entries_.count(key) > 0) {
    throw LexiconError("duplicate " + Describe(entry));
  }
  entries_.emplace(std::move(key), std::move(entry));
}

bool Lexicon::Remove(const std::string &key, LexRole role) {
  return entries_.erase({key, role}) > 0;
}

const LexEntry *Lexicon::Find(const std::string &key, LexRole role) const {
  auto it = entries_.find({key, role});
  return it == entries_.end() ? nullptr : &it->second;
}

const LexEntry *Lexicon::Find(const std::string &key, LexRole role,
                              const LanguageCode &lang) const {
  const LexEntry *e = Find(key, role);
  return e != nullptr && e->templates.count(lang.str()) > 0 ? e : nullptr;
}

Lexicon LoadLexicon(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw LexiconError(std::string("malformed lexicon document: ") + e.what());
  }

  Lexicon lex;
  try {
    if (!doc.is_object()) throw LexiconError("lexicon must be a JSON object");
    const json &languages = doc.at("languages");
    if (!languages.is_array()) throw LexiconError("'languages' must be an array");
    for (const json &code : languages) {
      lex.DeclareLanguage(LanguageCode::Parse(code.get<std::string>()));
    }
    const json &entries = doc.at("entries");
    if (!entries.is_array()) throw LexiconError("'entries' must be an array");
    for (const json &e : entries) {
      LexEntry entry;
      entry.key = e.at("key").get<std::string>();
      const std::string role = e.at("role").get<std::string>();
      auto parsed = ParseRole(role);
      if (!parsed) {
        throw LexiconError("entry '" + entry.key + "': unknown role '" + role +
                           "'");
      }
      entry.role = *parsed;
      if (e.contains("arity")) {
        const int arity = e.at("arity").get<int>();
        if (arity < 0) {
          throw LexiconError("entry '" + entry.key + "': negative arity");
        }
        entry.arity = static_cast<size_t>(arity);
      }
      entry.templates =
          e.at("templates").get<std::map<std::string, std::string>>();
      if (e.contains("synonyms")) {
        entry.synonyms = e.at("synonyms")
                             .get<std::map<std::string, std::vector<std::string>>>();
      }
      lex.Add(std::move(entry));
    }
  } catch (const json::exception &e) {
    throw LexiconError(std::string("malformed lexicon document: ") + e.what());
  }
  return lex;
}

std::string ToString(const MissingEntry &m) {
  return m.key + "\t" + RoleName(m.role) + "\t" + m.lang;
}

std::vector<MissingEntry> Coverage(const Lexicon &lex, const RuleSet &rs,
                                   const LanguageCode &lang) {
  std::vector<const Rule *> rules;
  for (const Rule &r : rs.rules) rules.push_back(&r);
  return Coverage(lex, rules, lang);
}

std::vector<MissingEntry> Coverage(const Lexicon &lex,
                                   const std::vector<const Rule *> &rules,
                                   const LanguageCode &lang) {
  std::vector<MissingEntry> missing;
  auto need = [&](const std::string &key, LexRole role) {
    if (lex.Find(key, role, lang) != nullptr) return;
    MissingEntry m{key, role, lang.str()};
    if (std::find(missing.begin(), missing.end(), m) == missing.end()) {
      missing.push_back(std::move(m));
    }
  };
  auto need_constants = [&](const Atom &atom) {
    for (const Term &t : atom.args) {
      if (t.is_constant()) need(t.name, LexRole::kConstantPhrase);
    }
  };

  for (const Rule *r : rules) {
    for (const Conjunction &c : r->premises) {
      for (const Atom &a : c.atoms) {
        if (lex.Find(a.predicate, LexRole::kSubjectHead, lang) == nullptr) {
          need(a.predicate, LexRole::kPremiseModifier);
        }
        need_constants(a);
      }
    }
    need(r->conclusion.predicate, LexRole::kConclusionVerbPhrase);
    need_constants(r->conclusion);
  }
  return missing;
}

}  // namespace ruledoc
