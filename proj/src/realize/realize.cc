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

#include "ruledoc/realize.h"

#include <cctype>
#include <optional>

namespace ruledoc {
namespace {

struct LanguageWords {
  const char *code;
  const char *disjunction;
  const char *contrast;
};

constexpr LanguageWords kWords[] = {
    {"en", "or", "but"},
    {"de", "oder", "aber"},
};

const LanguageWords &WordsFor(const LanguageCode &lang) {
  for (const auto &w : kWords) {
    if (lang.str() == w.code) return w;
  }
  return kWords[0];
}

std::string Capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::string Terminate(std::string s) {
  if (s.empty() || s.back() != '.') s += '.';
  return s;
}

void Append(std::string *out, const std::string &part, const char *sep = " ") {
  if (part.empty()) return;
  if (!out->empty()) *out += sep;
  *out += part;
}

class ClauseBuilder {
 public:
  ClauseBuilder(const Lexicon &lex, const LanguageCode &lang, size_t variant)
      : lex_(lex), lang_(lang), variant_(variant) {}

  std::string Build(const MergeGroup &group) {
    const Rule &rule = group.merged;
    const size_t n = rule.premises.size();
    std::vector<std::string> subject_phrase(n), subject_pred(n), modifiers(n);
    std::vector<std::optional<std::string>> canned_premise(n);
    std::optional<RealizeError> no_subject;

    for (size_t i = 0; i < n; ++i) {
      std::vector<const Atom *> subjects;
      for (const Atom &a : rule.premises[i].atoms) {
        if (lex_.Find(a.predicate, LexRole::kSubjectHead, lang_)) {
          RequireConstants(a);
          subjects.push_back(&a);
          continue;
        }
        const LexEntry &modifier = Need(a.predicate, LexRole::kPremiseModifier);
        RequireConstants(a);
        Append(&modifiers[i], Fill(modifier, a));
      }
      if (subjects.size() == 1) {
        const Atom &s = *subjects.front();
        subject_pred[i] = s.predicate;
        subject_phrase[i] = Fill(Need(s.predicate, LexRole::kSubjectHead), s);
      } else if (!no_subject) {
        no_subject.emplace(
            "E_NO_SUBJECT", rule.label, LexRole::kSubjectHead, lang_.str(), "",
            "rule <" + rule.label + "> disjunct " + std::to_string(i) +
                " has " + std::to_string(subjects.size()) +
                " subject atoms, expected exactly one");
      }
      const std::string &origin =
          i < group.disjunct_origins.size() ? group.disjunct_origins[i] : rule.label;
      canned_premise[i] = Canned(origin + "#premise");
    }
    const LexEntry &verb_entry =
        Need(rule.conclusion.predicate, LexRole::kConclusionVerbPhrase);
    RequireConstants(rule.conclusion);
    const std::string verb = Fill(verb_entry, rule.conclusion);
    if (no_subject) throw *no_subject;

    if (auto whole = Canned(rule.label)) return *whole;
    for (const std::string &o : rule.origin) {
      if (auto whole = Canned(o)) return *whole;
    }

    std::string premises;
    const std::string joiner =
        std::string(" ") + WordsFor(lang_).disjunction + " ";
    for (size_t i = 0; i < n; ++i) {
      std::string phrase;
      if (canned_premise[i]) {
        phrase = *canned_premise[i];
      } else {
        const bool own_subject = i == 0 || canned_premise[0].has_value() ||
                                 subject_pred[i] != subject_pred[0] ||
                                 modifiers[i].empty();
        if (own_subject) phrase = subject_phrase[i];
        Append(&phrase, modifiers[i]);
      }
      Append(&premises, phrase, joiner.c_str());
    }
    std::string clause = premises;
    Append(&clause, verb);
    return clause;
  }

 private:
  const LexEntry &Need(const std::string &key, LexRole role) {
    const LexEntry *e = lex_.Find(key, role, lang_);
    if (e == nullptr) {
      throw RealizeError("E_LEX_MISSING", key, role, lang_.str(), "",
                         std::string("missing lexicon entry '") + key + "' (" +
                             RoleName(role) + ") for language '" +
                             lang_.str() + "'");
    }
    return *e;
  }

  // Every constant argument must be verbalizable, referenced or not.
  void RequireConstants(const Atom &atom) {
    for (const Term &t : atom.args) {
      if (t.is_constant()) Need(t.name, LexRole::kConstantPhrase);
    }
  }

  std::optional<std::string> Canned(const std::string &key) const {
    const LexEntry *e = lex_.Find(key, LexRole::kCannedClause, lang_);
    if (e == nullptr) return std::nullopt;
    return e->Variant(lang_, variant_);
  }

  std::string Fill(const LexEntry &entry, const Atom &atom) {
    std::string out;
    for (const TemplatePiece &p : SplitTemplate(entry.Variant(lang_, variant_))) {
      if (!p.is_slot) {
        out += p.text;
      } else if (p.slot < atom.arity()) {
        const Term &t = atom.args[p.slot];
        out += t.is_constant()
                   ? Need(t.name, LexRole::kConstantPhrase).Variant(lang_, variant_)
                   : t.name;
      }
    }
    return out;
  }

  const Lexicon &lex_;
  const LanguageCode &lang_;
  size_t variant_;
};

std::string Heading(const std::string &predicate, const Lexicon &lex,
                    const LanguageCode &lang) {
  const LexEntry *e =
      lex.Find(predicate + "#heading", LexRole::kCannedClause, lang);
  return e == nullptr ? predicate : e->templates.at(lang.str());
}

}  // namespace

std::string RealizeClause(const MergeGroup &group, const Lexicon &lex,
                          const LanguageCode &lang, size_t variant) {
  return ClauseBuilder(lex, lang, variant).Build(group);
}

std::string RealizeContrast(const ContrastGroup &group, const Lexicon &lex,
                            const LanguageCode &lang, size_t variant) {
  const std::string joiner = std::string(" ") + WordsFor(lang).contrast + " ";
  std::string sentence;
  std::optional<RealizeError> no_subject;
  for (size_t i = 0; i < group.members.size(); ++i) {
    std::string clause;
    try {
      clause = RealizeClause(group.members[i], lex, lang, variant);
    } catch (const RealizeError &e) {
      // Missing entries in later members take precedence.
      if (e.code() != "E_NO_SUBJECT") throw;
      if (!no_subject) no_subject.emplace(e);
      continue;
    }
    if (i == 0) {
      sentence = Capitalize(std::move(clause));
    } else {
      sentence += joiner + clause;
    }
  }
  if (no_subject) throw *no_subject;
  return Terminate(std::move(sentence));
}

std::string Render(const std::vector<RealizedSection> &sections,
                   OutputFormat format) {
  std::string out;
  for (size_t i = 0; i < sections.size(); ++i) {
    if (i > 0) out += '\n';
    if (format == OutputFormat::kMarkdown) out += "## ";
    out += sections[i].heading + "\n";
    for (const std::string &s : sections[i].sentences) out += s + "\n";
  }
  return out;
}

RealizedDocument RealizeDocument(const DocumentPlan &dp, const Lexicon &lex,
                                 const LanguageCode &lang,
                                 const RealizeOptions &options) {
  RealizedDocument doc;
  doc.language = lang.str();
  std::optional<RealizeError> no_subject;
  size_t item = 0;
  for (const Section &section : dp.sections) {
    RealizedSection out{Heading(section.heading_key, lex, lang), {}};
    for (const PlanGroup &g : section.items) {
      const size_t variant = options.vary ? item : 0;
      ++item;
      try {
        if (const auto *m = std::get_if<MergeGroup>(&g)) {
          out.sentences.push_back(
              Terminate(Capitalize(RealizeClause(*m, lex, lang, variant))));
        } else {
          out.sentences.push_back(RealizeContrast(std::get<ContrastGroup>(g),
                                                  lex, lang, variant));
        }
      } catch (const RealizeError &e) {
        RealizeError located(e.code(), e.key(), e.role(), e.lang(),
                             section.heading_key,
                             std::string(e.what()) + " in section '" +
                                 section.heading_key + "'");
        if (e.code() != "E_NO_SUBJECT") throw located;
        if (!no_subject) no_subject.emplace(std::move(located));
      }
    }
    doc.sections.push_back(std::move(out));
  }
  if (no_subject) throw *no_subject;
  doc.rendering = Render(doc.sections, options.format);
  return doc;
}

}  // namespace ruledoc
