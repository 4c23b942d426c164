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

#ifndef RULEDOC_AGGREGATE_H_
#define RULEDOC_AGGREGATE_H_

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ruledoc/ast.h"

namespace ruledoc {

// Rules sharing a conclusion predicate, in source order.
struct Cluster {
  std::string key;
  std::vector<Rule> members;
};

// Rules with alpha-equivalent conclusions folded into one disjunctive rule.
// A singleton group carries its source rule unchanged.
struct MergeGroup {
  Rule merged;
  // Source label of each disjunct of `merged.premises`.
  std::vector<std::string> disjunct_origins;

  friend bool operator==(const MergeGroup &, const MergeGroup &) = default;
};

// Merge groups whose conclusions differ only at `contrast_positions`,
// verbalized together in one sentence.
struct ContrastGroup {
  std::vector<MergeGroup> members;
  std::set<size_t> contrast_positions;

  friend bool operator==(const ContrastGroup &, const ContrastGroup &) = default;
};

using PlanGroup = std::variant<MergeGroup, ContrastGroup>;

struct AggregationPlan {
  std::vector<PlanGroup> groups;
};

// Contrast groups only fold conclusions that differ in this many positions.
inline constexpr size_t kMaxContrastPositions = 1;

// Renames variables to v0, v1, ... by first occurrence in the conclusion and
// then in the premises, left to right.
Rule Canonicalize(const Rule &rule);

// Partition by conclusion predicate. Clusters appear in order of first use.
std::vector<Cluster> ClusterRules(const RuleSet &rs);

// Merges members whose canonical conclusions are equal. The merged rule
// concatenates the members' disjuncts in source order and is labeled with the
// origin labels joined by `+`.
std::vector<MergeGroup> MergeCluster(const Cluster &cluster);

// Folds merge groups whose conclusions differ in 1..kMaxContrastPositions
// positions into contrast groups. Greedy in source order.
std::vector<PlanGroup> Contrast(const std::vector<MergeGroup> &groups);

// ClusterRules, then MergeCluster and Contrast per cluster.
AggregationPlan BuildPlan(const RuleSet &rs);

// Wraps a rule as a singleton merge group.
MergeGroup SingletonGroup(const Rule &rule);

// Restricts a merge group to the disjuncts whose origin is in `keep`. Returns
// a group with no disjuncts when nothing is kept.
MergeGroup RestrictGroup(const MergeGroup &group,
                         const std::vector<std::string> &keep);

// Argument positions where two canonical conclusions differ.
std::set<size_t> DifferingPositions(const Atom &a, const Atom &b);

// Conclusion predicate of a group.
const std::string &GroupPredicate(const PlanGroup &group);
// Origin labels of a group in order.
std::vector<std::string> GroupOrigins(const PlanGroup &group);

// All merged rules of a plan, contrast members included, in plan order.
RuleSet FlattenPlan(const AggregationPlan &plan);

// One line per group: `MERGE a+b -> head` or `CONTRAST {a+b | c} positions={0}`.
std::string DescribePlan(const AggregationPlan &plan);

}  // namespace ruledoc

#endif  // RULEDOC_AGGREGATE_H_
