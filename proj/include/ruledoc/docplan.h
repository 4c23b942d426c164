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

#ifndef RULEDOC_DOCPLAN_H_
#define RULEDOC_DOCPLAN_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ruledoc/aggregate.h"
#include "ruledoc/error.h"

namespace ruledoc {

class PlanError : public Error {
 public:
  using Error::Error;
};

enum class Directive { kAlways, kAuto, kNever };

const char *DirectiveName(Directive d);

struct SelectionPolicy {
  Directive default_directive = Directive::kAuto;
  std::map<std::string, Directive> labels;

  Directive For(const std::string &label) const;
};

// Parses `{ "default": "Auto", "labels": { "platinumClub": "Never" } }`.
// Throws PlanError (E_POLICY) on malformed input or unknown directives.
SelectionPolicy LoadPolicy(std::string_view text);

struct Section {
  // Conclusion predicate shared by the section's groups.
  std::string heading_key;
  std::vector<PlanGroup> items;
};

struct DocumentPlan {
  std::vector<Section> sections;
};

struct PlanOptions {
  // A contrast member built from several rules is stated on its own first;
  // inside the contrast it is then represented by its lead origin rule.
  bool split_compound_contrasts = true;
};

// Applies the selection policy to an aggregation plan and lays it out in one
// section per conclusion predicate. Never-labeled origins are removed first;
// a contrast left with one member becomes a plain merge group. Throws
// PlanError (E_UNKNOWN_LABEL) for directives naming labels absent from the
// plan.
DocumentPlan PlanDocument(const AggregationPlan &plan,
                          const SelectionPolicy &policy,
                          const PlanOptions &options = {});

// Number of items across all sections.
size_t ItemCount(const DocumentPlan &dp);

}  // namespace ruledoc

#endif  // RULEDOC_DOCPLAN_H_
