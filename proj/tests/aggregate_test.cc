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

#include <algorithm>

#include "ruledoc/aggregate.h"
#include "ruledoc/engine.h"
#include "ruledoc/parser.h"
#include "ruledoc/printer.h"
#include "testing.h"

namespace ruledoc {
namespace {

using testing::A;
using testing::C;
using testing::V;

RuleSet Parse(std::initializer_list<const char *> blocks) {
  std::string text;
  for (const char *b : blocks) text += b;
  return ParseRuleSet(text);
}

TEST(CanonicalizeTest, RenamesByFirstOccurrence) {
  Rule r = Canonicalize(Parse({testing::kSteadySpender}).rules[0]);
  EXPECT_EQ(r.conclusion, A("giveDiscount", {C("percent5"), V("v0")}));
  EXPECT_EQ(r.premises[0].atoms[0], A("shopper", {V("v0")}));
  EXPECT_EQ(r.label, "steadySpender");
}

TEST(CanonicalizeTest, AlphaEquivalentRulesCoincide) {
  Rule a = Parse({testing::kSteadySpender}).rules[0];
  Rule b = ParseRuleSet(
               "<steadySpender> if shopper(?Customer) and spendingHistory(?Customer, loyal)"
               " then giveDiscount(percent5, ?Customer);")
               .rules[0];
  EXPECT_FALSE(a == b);
  EXPECT_EQ(Canonicalize(a), Canonicalize(b));
}

TEST(CanonicalizeTest, ConclusionVariablesComeFirst) {
  Rule r = Canonicalize(ParseRuleSet("<a> if p(?A, ?B) and r(?C) then q(?B);").rules[0]);
  EXPECT_EQ(r.conclusion, A("q", {V("v0")}));
  EXPECT_EQ(r.premises[0].atoms[0], A("p", {V("v1"), V("v0")}));
  EXPECT_EQ(r.premises[0].atoms[1], A("r", {V("v2")}));
}

TEST(CanonicalizeTest, GroundRuleUnchangedAndIdempotent) {
  Rule g = ParseRuleSet("<a> if p(k) then q(k);").rules[0];
  EXPECT_EQ(Canonicalize(g), g);
  std::mt19937 rng(1);
  for (int n = 0; n < 200; ++n) {
    for (const Rule &r : testing::RandomLogicCase(rng).rules.rules) {
      EXPECT_EQ(Canonicalize(Canonicalize(r)), Canonicalize(r));
    }
  }
}

TEST(ClusterTest, DiscountRulesFormOneCluster) {
  auto clusters =
      ClusterRules(Parse({testing::kSteadySpender, testing::kPlatinumClub, testing::kStoreCard}));
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].key, "giveDiscount");
  ASSERT_EQ(clusters[0].members.size(), 3u);
  EXPECT_EQ(clusters[0].members[0].label, "steadySpender");
  EXPECT_EQ(clusters[0].members[1].label, "platinumClub");
  EXPECT_EQ(clusters[0].members[2].label, "storeCard");
}

TEST(ClusterTest, EmptyAndTwoPredicates) {
  EXPECT_TRUE(ClusterRules(RuleSet{}).empty());
  auto clusters = ClusterRules(ParseRuleSet(
      "<a> if x(?X) then q(?X);\n<b> if x(?X) then p(?X);\n<c> if y(?X) then q(?X);"));
  ASSERT_EQ(clusters.size(), 2u);
  EXPECT_EQ(clusters[0].key, "q");
  EXPECT_EQ(clusters[0].members.size(), 2u);
  EXPECT_EQ(clusters[1].key, "p");
}

TEST(MergeClusterTest, SteadySpenderAndStoreCardMerge) {
  auto groups =
      MergeCluster(ClusterRules(Parse({testing::kSteadySpender, testing::kStoreCard})).front());
  ASSERT_EQ(groups.size(), 1u);
  const Rule &m = groups[0].merged;
  EXPECT_EQ(m.label, "steadySpender+storeCard");
  EXPECT_EQ(m.origin, (std::vector<std::string>{"steadySpender", "storeCard"}));
  ASSERT_EQ(m.premises.size(), 2u);
  EXPECT_EQ(m.premises[1].atoms[1], A("hasChargeCard", {V("v0"), C("store")}));
  EXPECT_EQ(m.conclusion, A("giveDiscount", {C("percent5"), V("v0")}));
  EXPECT_EQ(groups[0].disjunct_origins,
            (std::vector<std::string>{"steadySpender", "storeCard"}));
}

TEST(MergeClusterTest, DifferentConstantsDoNotMerge) {
  RuleSet rs = Parse({testing::kSteadySpender, testing::kPlatinumClub});
  auto groups = MergeCluster(ClusterRules(rs).front());
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0].merged, rs.rules[0]);
  EXPECT_EQ(groups[1].merged, rs.rules[1]);
}

TEST(MergeClusterTest, SingletonUnchanged) {
  RuleSet rs = Parse({testing::kPlatinumClub});
  auto groups = MergeCluster(ClusterRules(rs).front());
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].merged, rs.rules[0]);
  EXPECT_EQ(groups[0].merged.conclusion.args[1], V("Cust"));
}

TEST(ContrastTest, DiscountPairContrastsAtPositionZero) {
  RuleSet rs = Parse({testing::kSteadySpender, testing::kPlatinumClub});
  auto out = Contrast({SingletonGroup(rs.rules[0]), SingletonGroup(rs.rules[1])});
  ASSERT_EQ(out.size(), 1u);
  const auto &cg = std::get<ContrastGroup>(out[0]);
  EXPECT_EQ(cg.members.size(), 2u);
  EXPECT_EQ(cg.contrast_positions, (std::set<size_t>{0}));
}

TEST(ContrastTest, LoneMergePassesThrough) {
  auto groups =
      MergeCluster(ClusterRules(Parse({testing::kSteadySpender, testing::kStoreCard})).front());
  auto out = Contrast(groups);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(std::get<MergeGroup>(out[0]), groups[0]);
}

TEST(ContrastTest, TwoDifferingPositionsExceedCap) {
  // Conclusions q(a, b) and q(b, a) differ at both positions.
  RuleSet rs = ParseRuleSet("<x> if p(?X) then q(a, b);\n<y> if p(?X) then q(b, a);");
  auto out = Contrast({SingletonGroup(rs.rules[0]), SingletonGroup(rs.rules[1])});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<MergeGroup>(out[0]));
  EXPECT_TRUE(std::holds_alternative<MergeGroup>(out[1]));
}

TEST(ContrastTest, MaximalGroupsInSourceOrder) {
  RuleSet rs = ParseRuleSet(
      "<a> if p(?X) then q(k1, ?X);\n"
      "<b> if p(?X) then q(k2, k9);\n"
      "<c> if p(?X) then q(k3, ?X);\n"
      "<d> if p(?X) then q(k4, ?X);");
  std::vector<MergeGroup> groups;
  for (const Rule &r : rs.rules) groups.push_back(SingletonGroup(r));
  auto out = Contrast(groups);
  ASSERT_EQ(out.size(), 2u);
  const auto &cg = std::get<ContrastGroup>(out[0]);
  ASSERT_EQ(cg.members.size(), 3u);
  EXPECT_EQ(cg.members[1].merged.label, "c");
  EXPECT_EQ(std::get<MergeGroup>(out[1]).merged.label, "b");
}

TEST(BuildPlanTest, DiscountRules) {
  AggregationPlan plan =
      BuildPlan(Parse({testing::kSteadySpender, testing::kPlatinumClub, testing::kStoreCard}));
  ASSERT_EQ(plan.groups.size(), 1u);
  const auto &cg = std::get<ContrastGroup>(plan.groups[0]);
  ASSERT_EQ(cg.members.size(), 2u);
  EXPECT_EQ(cg.members[0].merged.label, "steadySpender+storeCard");
  EXPECT_EQ(cg.members[1].merged.label, "platinumClub");
  EXPECT_EQ(cg.contrast_positions, (std::set<size_t>{0}));
  EXPECT_EQ(DescribePlan(plan),
            "CONTRAST {steadySpender+storeCard | platinumClub} positions={0}\n");
}

TEST(BuildPlanTest, EmptyAndUnrelated) {
  EXPECT_TRUE(BuildPlan(RuleSet{}).groups.empty());
  AggregationPlan plan =
      BuildPlan(ParseRuleSet("<a> if x(?X) then q(?X);\n<b> if x(?X) then p(?X);"));
  ASSERT_EQ(plan.groups.size(), 2u);
  EXPECT_EQ(DescribePlan(plan), "MERGE a -> q(?X)\nMERGE b -> p(?X)\n");
}

TEST(BuildPlanTest, MergedPlanPrintsAndReparses) {
  RuleSet flat = FlattenPlan(
      BuildPlan(Parse({testing::kSteadySpender, testing::kPlatinumClub, testing::kStoreCard})));
  EXPECT_EQ(ParseRuleSet(PrintRuleSet(flat)), flat);
}

TEST(RestrictGroupTest, DropsDisjunctsOfRemovedOrigins) {
  auto g =
      MergeCluster(ClusterRules(Parse({testing::kSteadySpender, testing::kStoreCard})).front())
          .front();
  MergeGroup r = RestrictGroup(g, {"storeCard"});
  EXPECT_EQ(r.merged.label, "storeCard");
  EXPECT_EQ(r.merged.origin, std::vector<std::string>{"storeCard"});
  ASSERT_EQ(r.merged.premises.size(), 1u);
  EXPECT_EQ(r.merged.premises[0].atoms[1].predicate, "hasChargeCard");
  EXPECT_TRUE(RestrictGroup(g, {}).merged.premises.empty());
}

std::multiset<std::string> Labels(const AggregationPlan &plan) {
  std::multiset<std::string> out;
  for (const PlanGroup &g : plan.groups)
    for (const std::string &o : GroupOrigins(g)) out.insert(o);
  return out;
}

// Group membership as sets of origin-label sets.
std::set<std::set<std::string>> Membership(const AggregationPlan &plan) {
  std::set<std::set<std::string>> out;
  for (const PlanGroup &g : plan.groups) {
    auto origins = GroupOrigins(g);
    out.emplace(origins.begin(), origins.end());
  }
  return out;
}

TEST(BuildPlanTest, Properties) {
  std::mt19937 rng(17);
  for (int n = 0; n < 400; ++n) {
    auto c = testing::RandomLogicCase(rng);
    AggregationPlan plan = BuildPlan(c.rules);
    // Coverage of labels.
    std::multiset<std::string> input;
    for (const Rule &r : c.rules.rules) input.insert(r.label);
    ASSERT_EQ(Labels(plan), input);
    // Idempotence on the flattened merged rules.
    AggregationPlan again = BuildPlan(FlattenPlan(plan));
    ASSERT_EQ(again.groups.size(), plan.groups.size());
    EXPECT_EQ(DescribePlan(again), DescribePlan(plan));
    // Contrast invariants.
    for (const PlanGroup &g : plan.groups) {
      if (const auto *cg = std::get_if<ContrastGroup>(&g)) {
        EXPECT_GE(cg->members.size(), 2u);
        EXPECT_EQ(cg->contrast_positions.size(), 1u);
        for (const MergeGroup &a : cg->members)
          for (const MergeGroup &b : cg->members) {
            if (&a == &b) continue;
            auto d = DifferingPositions(Canonicalize(a.merged).conclusion,
                                        Canonicalize(b.merged).conclusion);
            EXPECT_FALSE(d.empty());
            EXPECT_TRUE(std::includes(cg->contrast_positions.begin(),
                                      cg->contrast_positions.end(), d.begin(), d.end()));
          }
      }
    }
    // Determinism.
    EXPECT_EQ(DescribePlan(BuildPlan(c.rules)), DescribePlan(plan));
  }
}

TEST(BuildPlanTest, MergesAreOrderStable) {
  // Merge membership does not depend on rule order; contrast grouping is
  // greedy in source order, so only merge groups are compared.
  std::mt19937 rng(23);
  for (int n = 0; n < 300; ++n) {
    auto c = testing::RandomLogicCase(rng);
    RuleSet shuffled = c.rules;
    std::shuffle(shuffled.rules.begin(), shuffled.rules.end(), rng);
    auto merges = [](const RuleSet &rs) {
      std::set<std::set<std::string>> out;
      for (const Cluster &cl : ClusterRules(rs))
        for (const MergeGroup &g : MergeCluster(cl))
          out.emplace(g.merged.origin.begin(), g.merged.origin.end());
      return out;
    };
    EXPECT_EQ(merges(shuffled), merges(c.rules));
    (void)Membership;
  }
}

TEST(BuildPlanTest, SemanticPreservation) {
  std::mt19937 rng(31);
  int checked = 0;
  while (checked < 200) {
    auto c = testing::RandomLogicCase(rng);
    RuleSet merged = FlattenPlan(BuildPlan(c.rules));
    try {
      ASSERT_TRUE(ConclusionsEqual(c.rules, merged, c.universe)) << PrintRuleSet(c.rules);
      ++checked;
    } catch (const EngineError &e) {
      ASSERT_EQ(e.code(), "E_UNIVERSE_TOO_LARGE");
    }
  }
}

}  // namespace
}  // namespace ruledoc
