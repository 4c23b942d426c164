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

#include "ruledoc/ast.h"

#include <algorithm>

namespace ruledoc {

bool Atom::IsGround() const {
  return std::none_of(args.begin(), args.end(),
                      [](const Term &t) { return t.is_variable(); });
}

const Rule *RuleSet::Find(const std::string &label) const {
  for (const Rule &r : rules) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

std::string ToString(const Term &term) {
  return term.is_variable() ? "?" + term.name : term.name;
}

std::string ToString(const Atom &atom) {
  std::string out = atom.predicate;
  if (atom.args.empty()) return out;
  out += '(';
  for (size_t i = 0; i < atom.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(atom.args[i]);
  }
  out += ')';
  return out;
}

std::string ToString(const Conjunction &conj) {
  std::string out;
  for (size_t i = 0; i < conj.atoms.size(); ++i) {
    if (i > 0) out += " and ";
    out += ToString(conj.atoms[i]);
  }
  return out;
}

void CollectVariables(const Atom &atom, std::vector<std::string> *out) {
  for (const Term &t : atom.args) {
    if (!t.is_variable()) continue;
    if (std::find(out->begin(), out->end(), t.name) == out->end()) {
      out->push_back(t.name);
    }
  }
}

}  // namespace ruledoc
