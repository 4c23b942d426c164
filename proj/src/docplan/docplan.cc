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

#include "ruledoc/docplan.h"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace ruledoc {
namespace {

Directive ParseDirective(const std::string &name) {
  if (name == "Always") return Directive::kAlways;
  if (name == "Auto") return Directive::kAuto;
  if (name == "Never") return Directive::kNever;
  throw PlanError("E_POLICY", "unknown directive '" + name + "'");
}

// Drops Never-labeled disjuncts; returns false when nothing is left.
bool Select(const MergeGroup &group, const SelectionPolicy &policy,
            MergeGroup *out) {
  std::vector<std::string> keep;
  for (const std::string &o : group.merged.origin) {
    if (policy.For(o) != Directive::kNever) keep.push_back(o);
  }
  if (keep.empty()) return false;
  *out = keep.size() == group.merged.origin.size() ? group
                                                   : RestrictGroup(group, keep);
  return !out->merged.premises.empty();
}

void Emit(PlanGroup group, const PlanOptions &options,
          std::vector<PlanGroup> *items) {
  auto *cg = std::get_if<ContrastGroup>(&group);
  if (cg == nullptr || !options.split_compound_contrasts) {
    items->push_back(std::move(group));
    return;
  }
  ContrastGroup lead = *cg;
  for (size_t i = 0; i < cg->members.size(); ++i) {
    const MergeGroup &m = cg->members[i];
    if (m.merged.origin.size() < 2) continue;
    items->push_back(m);
    lead.members[i] = RestrictGroup(m, {m.merged.origin.front()});
  }
  items->push_back(std::move(lead));
}

}  // namespace

const char *DirectiveName(Directive d) {
  switch (d) {
    case Directive::kAlways: return "Always";
    case Directive::kAuto: return "Auto";
    case Directive::kNever: return "Never";
  }
  return "?";
}

Directive SelectionPolicy::For(const std::string &label) const {
  auto it = labels.find(label);
  return it == labels.end() ? default_directive : it->second;
}

SelectionPolicy LoadPolicy(std::string_view text) {
  using nlohmann::json;
  SelectionPolicy policy;
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw PlanError("E_POLICY", "policy must be a JSON object");
    if (doc.contains("default")) {
      policy.default_directive = ParseDirective(doc.at("default").get<std::string>());
    }
    if (doc.contains("labels")) {
      for (const auto &[label, d] :
           doc.at("labels").get<std::map<std::string, std::string>>()) {
        policy.labels[label] = ParseDirective(d);
      }
    }
  } catch (const json::exception &e) {
    throw PlanError("E_POLICY", std::string("malformed policy document: ") + e.what());
  }
  return policy;
}

DocumentPlan PlanDocument(const AggregationPlan &plan,
                          const SelectionPolicy &policy,
                          const PlanOptions &options) {
  std::set<std::string> known;
  for (const PlanGroup &g : plan.groups) {
    for (const std::string &o : GroupOrigins(g)) known.insert(o);
  }
  for (const auto &[label, d] : policy.labels) {
    if (known.count(label) == 0) {
      throw PlanError("E_UNKNOWN_LABEL",
                      "policy names unknown rule label '" + label + "'");
    }
  }

  DocumentPlan dp;
  for (const PlanGroup &g : plan.groups) {
    const std::string &key = GroupPredicate(g);
    if (dp.sections.empty() || dp.sections.back().heading_key != key) {
      dp.sections.push_back({key, {}});
    }
    std::vector<PlanGroup> &items = dp.sections.back().items;

    if (const auto *m = std::get_if<MergeGroup>(&g)) {
      MergeGroup kept;
      if (Select(*m, policy, &kept)) Emit(std::move(kept), options, &items);
      continue;
    }
    const ContrastGroup &cg = std::get<ContrastGroup>(g);
    ContrastGroup kept{{}, cg.contrast_positions};
    for (const MergeGroup &member : cg.members) {
      MergeGroup k;
      if (Select(member, policy, &k)) kept.members.push_back(std::move(k));
    }
    if (kept.members.size() == 1) {
      Emit(std::move(kept.members.front()), options, &items);
    } else if (kept.members.size() > 1) {
      Emit(std::move(kept), options, &items);
    }
  }
  dp.sections.erase(
      std::remove_if(dp.sections.begin(), dp.sections.end(),
                     [](const Section &s) { return s.items.empty(); }),
      dp.sections.end());
  return dp;
}

size_t ItemCount(const DocumentPlan &dp) {
  size_t n = 0;
  for (const Section &s : dp.sections) n += s.items.size();
  return n;
}

}  // namespace ruledoc
