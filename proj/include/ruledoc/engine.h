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

#ifndef RULEDOC_ENGINE_H_
#define RULEDOC_ENGINE_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ruledoc/ast.h"
#include "ruledoc/error.h"

namespace ruledoc {

// E_NOT_RANGE_RESTRICTED, E_NOT_GROUND, E_UNIVERSE_TOO_LARGE or
// E_EMPTY_UNIVERSE.
class EngineError : public Error {
 public:
  using Error::Error;
};

// Set of ground atoms, iterated in (predicate, argument names) order.
class FactBase {
 public:
  FactBase() = default;
  FactBase(std::initializer_list<Atom> atoms);

  // Returns true if the atom was new. Throws EngineError for non-ground atoms.
  bool Insert(Atom atom);
  bool Contains(const Atom &atom) const { return facts_.count(atom) > 0; }
  bool Includes(const FactBase &other) const;

  size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }
  std::set<Atom>::const_iterator begin() const { return facts_.begin(); }
  std::set<Atom>::const_iterator end() const { return facts_.end(); }

  friend bool operator==(const FactBase &, const FactBase &) = default;

 private:
  std::set<Atom> facts_;
};

// One rule firing. Applying `substitution` to the rule's conclusion yields
// `conclusion`.
struct Derivation {
  Atom conclusion;
  std::string rule_label;
  std::map<std::string, std::string> substitution;
  size_t disjunct_index = 0;
};

struct Saturation {
  FactBase facts;
  // Sorted by conclusion, then rule label, then disjunct. One record per
  // (conclusion, rule, disjunct) including re-derivations of known facts.
  std::vector<Derivation> derivations;
};

// Least fixpoint of `rs` over `fb` by semi-naive forward chaining. A rule
// fires when some disjunct is satisfied by one substitution.
Saturation Saturate(const RuleSet &rs, const FactBase &fb);

// Outcome of the exhaustive closure comparison.
struct Equivalence {
  bool equal = true;
  // First fact base (in enumeration order) whose closures differ.
  std::optional<FactBase> witness;
  // Ground atoms over all predicates and constants involved.
  size_t herbrand_base_size = 0;
  // Atoms that unify with some premise atom; every subset is enumerated.
  size_t relevant_atoms = 0;
  uint64_t fact_bases_checked = 0;
};

// Largest number of relevant atoms enumerated (2^20 fact bases).
inline constexpr size_t kMaxEnumeratedAtoms = 20;

// Decides whether `a` and `b` produce the same closure for every fact base
// over the Herbrand base induced by their predicates and `universe` plus the
// constants occurring in the rules.
//
// Only subsets of the relevant atoms are enumerated. A fact that matches no
// premise atom cannot make either rule set fire, so it passes through both
// closures unchanged and never separates them. Intended for desk-scale
// inputs: a universe of at most 2 constants, 4 predicates, arity 2. Throws
// E_UNIVERSE_TOO_LARGE when more than kMaxEnumeratedAtoms atoms would be
// enumerated or the indexed atom space exceeds 64.
Equivalence CheckConclusionsEqual(const RuleSet &a, const RuleSet &b,
                                  const std::vector<std::string> &universe);
bool ConclusionsEqual(const RuleSet &a, const RuleSet &b,
                      const std::vector<std::string> &universe);

}  // namespace ruledoc

#endif  // RULEDOC_ENGINE_H_
