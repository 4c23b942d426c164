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

#include <gtest/gtest.h>

#include <random>

#include "ruledoc/parser.h"
#include "ruledoc/realize.h"
#include "testing.h"

namespace ruledoc {
namespace {

const LanguageCode kEn = LanguageCode::Parse("en");
const LanguageCode kDe = LanguageCode::Parse("de");

const char *kSentence1 =
    "Customers with a loyal spending history or members of our charge card "
    "obtain a discount of 5 %.";
const char *kSentence2 =
    "Customers with a loyal spending history obtain a discount of 5 % but as "
    "member of a platinum card you obtain a discount of 10 %.";

Lexicon Shipped() { return LoadLexicon(testing::ReadData("marketplace.lex.json")); }

RuleSet DiscountRules() {
  return ParseRuleSet(std::string(testing::kSteadySpender) + testing::kPlatinumClub +
                      testing::kStoreCard);
}

MergeGroup Merged() {
  return MergeCluster(ClusterRules(ParseRuleSet(std::string(testing::kSteadySpender) +
                                                testing::kStoreCard))
                          .front())
      .front();
}

size_t Count(const std::string &hay, const std::string &needle) {
  size_t n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1))
    ++n;
  return n;
}

template <typename Fn>
std::string ErrorCode(Fn fn) {
  try {
    fn();
  } catch (const RealizeError &e) {
    return e.code();
  }
  return "";
}

TEST(RealizeClauseTest, MergedGroupMatchesSecondSentence) {
  EXPECT_EQ(RealizeClause(Merged(), Shipped(), kEn),
            "Customers with a loyal spending history or members of our charge card "
            "obtain a discount of 5 %");
}

TEST(RealizeClauseTest, SingletonSteadySpender) {
  RuleSet rs = ParseRuleSet(testing::kSteadySpender);
  EXPECT_EQ(RealizeClause(SingletonGroup(rs.rules[0]), Shipped(), kEn),
            "Customers with a loyal spending history obtain a discount of 5 %");
}

TEST(RealizeClauseTest, ComposedWithoutCannedPremise) {
  Lexicon lex = Shipped();
  ASSERT_TRUE(lex.Remove("storeCard#premise", LexRole::kCannedClause));
  EXPECT_EQ(RealizeClause(Merged(), lex, kEn),
            "Customers with a loyal spending history or with a store charge card "
            "obtain a discount of 5 %");
}

TEST(RealizeClauseTest, CannedClauseIsVerbatim) {
  RuleSet rs = ParseRuleSet(testing::kPlatinumClub);
  EXPECT_EQ(RealizeClause(SingletonGroup(rs.rules[0]), Shipped(), kEn),
            "as member of a platinum card you obtain a discount of 10 %");
}

TEST(RealizeClauseTest, EmptyLexicon) {
  Lexicon lex;
  lex.DeclareLanguage(kEn);
  try {
    RealizeClause(Merged(), lex, kEn);
    FAIL();
  } catch (const RealizeError &e) {
    EXPECT_EQ(e.code(), "E_LEX_MISSING");
    EXPECT_EQ(e.lang(), "en");
  }
}

TEST(RealizeClauseTest, NoSubject) {
  Lexicon lex = Shipped();
  ASSERT_TRUE(lex.Remove("shopper", LexRole::kSubjectHead));
  LexEntry e;
  e.key = "shopper";
  e.role = LexRole::kPremiseModifier;
  e.arity = 1;
  e.templates = {{"en", "shopping"}, {"de", "einkaufend"}};
  lex.Add(e);
  EXPECT_EQ(ErrorCode([&] { RealizeClause(Merged(), lex, kEn); }), "E_NO_SUBJECT");
}

TEST(RealizeContrastTest, FirstSentenceEnglish) {
  DocumentPlan dp = PlanDocument(BuildPlan(DiscountRules()), SelectionPolicy{});
  const auto &cg = std::get<ContrastGroup>(dp.sections[0].items[1]);
  EXPECT_EQ(RealizeContrast(cg, Shipped(), kEn), kSentence2);
}

TEST(RealizeContrastTest, GermanStructure) {
  DocumentPlan dp = PlanDocument(BuildPlan(DiscountRules()), SelectionPolicy{});
  const auto &cg = std::get<ContrastGroup>(dp.sections[0].items[1]);
  std::string s = RealizeContrast(cg, Shipped(), kDe);
  EXPECT_EQ(Count(s, " aber "), 1u);
  EXPECT_EQ(s.back(), '.');
  EXPECT_EQ(Count(s, "."), 1u);
  EXPECT_EQ(s,
            "Kunden mit einer treuen Kaufhistorie erhalten einen Rabatt von 5 % aber "
            "als Mitglied des Platinclubs erhalten Sie einen Rabatt von 10 %.");
}

TEST(RealizeContrastTest, PropagatesFirstError) {
  Lexicon lex;
  lex.DeclareLanguage(kEn);
  RuleSet rs = ParseRuleSet(std::string(testing::kSteadySpender) + testing::kPlatinumClub);
  ContrastGroup cg{{SingletonGroup(rs.rules[0]), SingletonGroup(rs.rules[1])}, {0}};
  try {
    RealizeContrast(cg, lex, kEn);
    FAIL();
  } catch (const RealizeError &e) {
    EXPECT_EQ(e.code(), "E_LEX_MISSING");
    EXPECT_EQ(e.key(), "shopper");
  }
}

TEST(RealizeDocumentTest, DiscountPipelineEnglish) {
  DocumentPlan dp = PlanDocument(BuildPlan(DiscountRules()), SelectionPolicy{});
  RealizedDocument doc = RealizeDocument(dp, Shipped(), kEn);
  ASSERT_EQ(doc.sections.size(), 1u);
  EXPECT_EQ(doc.sections[0].heading, "Discounts");
  EXPECT_EQ(doc.sections[0].sentences,
            (std::vector<std::string>{kSentence1, kSentence2}));
  EXPECT_EQ(doc.rendering, std::string("## Discounts\n") + kSentence1 + "\n" + kSentence2 + "\n");
}

TEST(RealizeDocumentTest, DiscountPipelineGerman) {
  DocumentPlan dp = PlanDocument(BuildPlan(DiscountRules()), SelectionPolicy{});
  RealizedDocument doc = RealizeDocument(dp, Shipped(), kDe);
  ASSERT_EQ(doc.sections.size(), 1u);
  EXPECT_EQ(doc.sections[0].heading, "Rabatte");
  ASSERT_EQ(doc.sections[0].sentences.size(), 2u);
  EXPECT_EQ(doc.sections[0].sentences[0],
            "Kunden mit einer treuen Kaufhistorie oder Inhaber unserer Kundenkarte "
            "erhalten einen Rabatt von 5 %.");
}

TEST(RealizeDocumentTest, EmptyPlan) {
  RealizedDocument doc = RealizeDocument(DocumentPlan{}, Shipped(), kEn);
  EXPECT_TRUE(doc.sections.empty());
  EXPECT_EQ(doc.rendering, "");
}

TEST(RealizeDocumentTest, MissingPercent10) {
  Lexicon lex = Shipped();
  ASSERT_TRUE(lex.Remove("percent10", LexRole::kConstantPhrase));
  DocumentPlan dp = PlanDocument(BuildPlan(DiscountRules()), SelectionPolicy{});
  try {
    RealizeDocument(dp, lex, kEn);
    FAIL();
  } catch (const RealizeError &e) {
    EXPECT_EQ(e.code(), "E_LEX_MISSING");
    EXPECT_EQ(e.key(), "percent10");
    EXPECT_EQ(e.role(), LexRole::kConstantPhrase);
    EXPECT_EQ(e.lang(), "en");
    EXPECT_EQ(e.section(), "giveDiscount");
  }
}

TEST(RealizeDocumentTest, HeadingFallsBackToPredicate) {
  Lexicon lex = Shipped();
  ASSERT_TRUE(lex.Remove("giveDiscount#heading", LexRole::kCannedClause));
  DocumentPlan dp = PlanDocument(BuildPlan(DiscountRules()), SelectionPolicy{});
  EXPECT_EQ(RealizeDocument(dp, lex, kEn).sections[0].heading, "giveDiscount");
}

TEST(RealizeDocumentTest, DeterministicAndPlainFormat) {
  DocumentPlan dp = PlanDocument(BuildPlan(DiscountRules()), SelectionPolicy{});
  const Lexicon lex = Shipped();
  EXPECT_EQ(RealizeDocument(dp, lex, kEn).rendering, RealizeDocument(dp, lex, kEn).rendering);
  RealizeOptions plain;
  plain.format = OutputFormat::kPlain;
  EXPECT_EQ(RealizeDocument(dp, lex, kEn, plain).rendering.rfind("Discounts\n", 0), 0u);
}

TEST(RealizeDocumentTest, VaryRotatesSynonyms) {
  DocumentPlan dp = PlanDocument(BuildPlan(DiscountRules()), SelectionPolicy{});
  RealizeOptions vary;
  vary.vary = true;
  RealizedDocument doc = RealizeDocument(dp, Shipped(), kEn, vary);
  ASSERT_EQ(doc.sections[0].sentences.size(), 2u);
  EXPECT_EQ(doc.sections[0].sentences[0], kSentence1);
  EXPECT_EQ(doc.sections[0].sentences[1],
            "Shoppers with a loyal spending history receive a discount of 5 % but as "
            "member of a platinum card you obtain a discount of 10 %.");
  EXPECT_EQ(RealizeDocument(dp, Shipped(), kEn, vary).rendering, doc.rendering);
}

TEST(RealizeDocumentTest, LanguageSymmetry) {
  const Lexicon lex = Shipped();
  for (const char *policy : {"{}", R"({"labels":{"platinumClub":"Never"}})"}) {
    DocumentPlan dp = PlanDocument(BuildPlan(DiscountRules()), LoadPolicy(policy));
    RealizedDocument en = RealizeDocument(dp, lex, kEn);
    RealizedDocument de = RealizeDocument(dp, lex, kDe);
    ASSERT_EQ(en.sections.size(), de.sections.size());
    for (size_t i = 0; i < en.sections.size(); ++i) {
      ASSERT_EQ(en.sections[i].sentences.size(), de.sections[i].sentences.size());
      for (size_t j = 0; j < en.sections[i].sentences.size(); ++j) {
        const std::string &e = en.sections[i].sentences[j];
        const std::string &d = de.sections[i].sentences[j];
        EXPECT_EQ(Count(e, " but "), Count(d, " aber "));
        EXPECT_EQ(Count(e, "."), 1u);
        EXPECT_EQ(Count(d, "."), 1u);
        EXPECT_EQ(e.back(), '.');
        EXPECT_EQ(d.back(), '.');
      }
    }
  }
}

// coverage = {} iff realization raises no E_LEX_MISSING.
TEST(RealizeDocumentTest, CoveragePairing) {
  std::mt19937 rng(99);
  int covered = 0, uncovered = 0;
  for (int n = 0; n < 400; ++n) {
    auto c = testing::RandomLogicCase(rng);
    Lexicon lex = testing::RandomLexicon(rng, c.rules, n % 2 ? 0.0 : 0.15);
    const LanguageCode &lang = n % 3 ? kEn : kDe;
    DocumentPlan dp = PlanDocument(BuildPlan(c.rules), SelectionPolicy{});
    const bool gaps = !Coverage(lex, c.rules, lang).empty();
    const std::string code = ErrorCode([&] { RealizeDocument(dp, lex, lang); });
    EXPECT_EQ(gaps, code == "E_LEX_MISSING") << n;
    (gaps ? uncovered : covered)++;
  }
  EXPECT_GT(covered, 100);
  EXPECT_GT(uncovered, 50);
}

}  // namespace
}  // namespace ruledoc
