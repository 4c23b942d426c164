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

#include "ruledoc/aggregate.h"

#include <algorithm>
#include <map>

namespace ruledoc {
namespace {

std::string JoinLabels(const std::vector<std::string> &labels) {
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += '+';
    out += labels[i];
  }
  return out;
}

bool Contains(const std::vector<std::string> &v, const std::string &s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

Rule Canonicalize(const Rule &rule) {
  std::vector<std::string> order;
  CollectVariables(rule.conclusion, &order);
  for (const Conjunction &c : rule.premises) {
    for (const Atom &a : c.atoms) CollectVariables(a, &order);
  }
  std::map<std::string, std::string> rename;
  for (size_t i = 0; i < order.size(); ++i) {
    rename[order[i]] = "v" + std::to_string(i);
  }
  auto apply = [&](Atom &a) {
    for (Term &t : a.args) {
      if (t.is_variable()) t.name = rename.at(t.name);
    }
  };
  Rule out = rule;
  apply(out.conclusion);
  for (Conjunction &c : out.premises) {
    for (Atom &a : c.atoms) apply(a);
  }
  return out;
}

std::vector<Cluster> ClusterRules(const RuleSet &rs) {
  std::vector<Cluster> clusters;
  std::map<std::string, size_t> slot;
  for (const Rule &r : rs.rules) {
    auto [it, fresh] = slot.emplace(r.conclusion.predicate, clusters.size());
    if (fresh) clusters.push_back({r.conclusion.predicate, {}});
    clusters[it->second].members.push_back(r);
  }
  return clusters;
}

MergeGroup SingletonGroup(const Rule &rule) {
  MergeGroup g{rule, {}};
  const std::vector<std::string> &origin = rule.origin;
  for (size_t i = 0; i < rule.premises.size(); ++i) {
    if (origin.empty()) {
      g.disjunct_origins.push_back(rule.label);
    } else {
      g.disjunct_origins.push_back(origin[std::min(i, origin.size() - 1)]);
    }
  }
  return g;
}

std::vector<MergeGroup> MergeCluster(const Cluster &cluster) {
  // Buckets of member indices with equal canonical conclusions, ordered by
  // their first member.
  std::vector<std::vector<size_t>> buckets;
  std::vector<Rule> canonical;
  for (size_t i = 0; i < cluster.members.size(); ++i) {
    canonical.push_back(Canonicalize(cluster.members[i]));
    bool placed = false;
    for (auto &bucket : buckets) {
      if (canonical[bucket.front()].conclusion == canonical[i].conclusion) {
        bucket.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) buckets.push_back({i});
  }

  std::vector<MergeGroup> groups;
  for (const auto &bucket : buckets) {
    if (bucket.size() == 1) {
      groups.push_back(SingletonGroup(cluster.members[bucket.front()]));
      continue;
    }
    MergeGroup g;
    g.merged.conclusion = canonical[bucket.front()].conclusion;
    g.merged.line = cluster.members[bucket.front()].line;
    for (size_t i : bucket) {
      const Rule &member = canonical[i];
      const MergeGroup single = SingletonGroup(member);
      for (const std::string &o : member.origin) g.merged.origin.push_back(o);
      for (const Conjunction &c : member.premises) g.merged.premises.push_back(c);
      for (const std::string &o : single.disjunct_origins)
        g.disjunct_origins.push_back(o);
    }
    g.merged.label = JoinLabels(g.merged.origin);
    groups.push_back(std::move(g));
  }
  return groups;
}

std::set<size_t> DifferingPositions(const Atom &a, const Atom &b) {
  std::set<size_t> out;
  const size_t n = std::max(a.arity(), b.arity());
  for (size_t i = 0; i < n; ++i) {
    if (i >= a.arity() || i >= b.arity() || !(a.args[i] == b.args[i])) {
      out.insert(i);
    }
  }
  return out;
}

std::vector<PlanGroup> Contrast(const std::vector<MergeGroup> &groups) {
  std::vector<Atom> heads;
  for (const MergeGroup &g : groups) {
    heads.push_back(Canonicalize(g.merged).conclusion);
  }
  std::vector<bool> taken(groups.size(), false);
  std::vector<PlanGroup> out;
  for (size_t i = 0; i < groups.size(); ++i) {
    if (taken[i]) continue;
    taken[i] = true;
    std::vector<size_t> members = {i};
    std::set<size_t> positions;
    for (size_t j = i + 1; j < groups.size(); ++j) {
      if (taken[j]) continue;
      if (heads[j].predicate != heads[i].predicate ||
          heads[j].arity() != heads[i].arity()) {
        continue;
      }
      std::set<size_t> widened = positions;
      bool fits = true;
      for (size_t m : members) {
        std::set<size_t> d = DifferingPositions(heads[m], heads[j]);
        if (d.empty()) {
          fits = false;
          break;
        }
        widened.insert(d.begin(), d.end());
      }
      if (!fits || widened.size() > kMaxContrastPositions) continue;
      positions = std::move(widened);
      members.push_back(j);
      taken[j] = true;
    }
    if (members.size() == 1) {
      out.emplace_back(groups[i]);
      continue;
    }
    ContrastGroup cg;
    for (size_t m : members) cg.members.push_back(groups[m]);
    cg.contrast_positions = std::move(positions);
    out.emplace_back(std::move(cg));
  }
  return out;
}

AggregationPlan BuildPlan(const RuleSet &rs) {
  AggregationPlan plan;
  for (const Cluster &c : ClusterRules(rs)) {
    for (PlanGroup &g : Contrast(MergeCluster(c))) {
      plan.groups.push_back(std::move(g));
    }
  }
  return plan;
}

MergeGroup RestrictGroup(const MergeGroup &group,
                         const std::vector<std::string> &keep) {
  MergeGroup out;
  out.merged.conclusion = group.merged.conclusion;
  out.merged.line = group.merged.line;
  for (const std::string &o : group.merged.origin) {
    if (Contains(keep, o)) out.merged.origin.push_back(o);
  }
  for (size_t i = 0; i < group.merged.premises.size(); ++i) {
    if (!Contains(keep, group.disjunct_origins[i])) continue;
    out.merged.premises.push_back(group.merged.premises[i]);
    out.disjunct_origins.push_back(group.disjunct_origins[i]);
  }
  out.merged.label = out.merged.origin == group.merged.origin
                         ? group.merged.label
                         : JoinLabels(out.merged.origin);
  return out;
}

const std::string &GroupPredicate(const PlanGroup &group) {
  if (const auto *m = std::get_if<MergeGroup>(&group)) {
    return m->merged.conclusion.predicate;
  }
  return std::get<ContrastGroup>(group).members.front().merged.conclusion.predicate;
}

std::vector<std::string> GroupOrigins(const PlanGroup &group) {
  if (const auto *m = std::get_if<MergeGroup>(&group)) return m->merged.origin;
  std::vector<std::string> out;
  for (const MergeGroup &m : std::get<ContrastGroup>(group).members) {
    out.insert(out.end(), m.merged.origin.begin(), m.merged.origin.end());
  }
  return out;
}

RuleSet FlattenPlan(const AggregationPlan &plan) {
  RuleSet rs;
  for (const PlanGroup &g : plan.groups) {
    if (const auto *m = std::get_if<MergeGroup>(&g)) {
      rs.rules.push_back(m->merged);
    } else {
      for (const MergeGroup &member : std::get<ContrastGroup>(g).members) {
        rs.rules.push_back(member.merged);
      }
    }
  }
  return rs;
}

std::string DescribePlan(const AggregationPlan &plan) {
  std::string out;
  for (const PlanGroup &g : plan.groups) {
    if (const auto *m = std::get_if<MergeGroup>(&g)) {
      out += "MERGE " + m->merged.label + " -> " +
             ToString(m->merged.conclusion) + "\n";
      continue;
    }
    const ContrastGroup &cg = std::get<ContrastGroup>(g);
    out += "CONTRAST {";
    for (size_t i = 0; i < cg.members.size(); ++i) {
      if (i > 0) out += " | ";
      out += cg.members[i].merged.label;
    }
    out += "} positions={";
    bool first = true;
    for (size_t p : cg.contrast_positions) {
      if (!first) out += ",";
      out += std::to_string(p);
      first = false;
    }
    out += "}\n";
  }
  return out;
}

}  // namespace ruledoc
