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

#ifndef RULEDOC_AST_H_
#define RULEDOC_AST_H_

#include <compare>
#include <string>
#include <vector>

namespace ruledoc {

// A variable (`?Cust`) or a constant (`loyal`, `percent5`). Variable names
// are stored without the leading `?`.
struct Term {
  enum class Kind { kConstant, kVariable };

  Kind kind = Kind::kConstant;
  std::string name;

  static Term Variable(std::string name) {
    return Term{Kind::kVariable, std::move(name)};
  }
  static Term Constant(std::string name) {
    return Term{Kind::kConstant, std::move(name)};
  }

  bool is_variable() const { return kind == Kind::kVariable; }
  bool is_constant() const { return kind == Kind::kConstant; }

  // Orders by name first so that sorted ground atoms read lexicographically.
  friend std::strong_ordering operator<=>(const Term &a, const Term &b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.kind <=> b.kind;
  }
  friend bool operator==(const Term &a, const Term &b) = default;
};

// Predicate application. Arity zero atoms print without parentheses.
struct Atom {
  std::string predicate;
  std::vector<Term> args;

  size_t arity() const { return args.size(); }
  bool IsGround() const;

  friend std::strong_ordering operator<=>(const Atom &a, const Atom &b) {
    if (auto c = a.predicate <=> b.predicate; c != 0) return c;
    return a.args <=> b.args;
  }
  friend bool operator==(const Atom &a, const Atom &b) = default;
};

struct Conjunction {
  std::vector<Atom> atoms;

  friend bool operator==(const Conjunction &a, const Conjunction &b) = default;
};

// Labeled implication. The premises form a disjunction of conjunctions;
// parsed rules have exactly one conjunction unless written with `or`.
struct Rule {
  std::string label;
  std::vector<Conjunction> premises;
  Atom conclusion;
  // Labels of the source rules this rule was built from.
  std::vector<std::string> origin;
  // 1-based source line of the label, 0 for constructed rules. Not part of
  // structural equality.
  int line = 0;

  friend bool operator==(const Rule &a, const Rule &b) {
    return a.label == b.label && a.premises == b.premises &&
           a.conclusion == b.conclusion && a.origin == b.origin;
  }
};

struct RuleSet {
  std::vector<Rule> rules;

  const Rule *Find(const std::string &label) const;

  friend bool operator==(const RuleSet &a, const RuleSet &b) = default;
};

// Text forms using the rule-file syntax, e.g. `giveDiscount(percent5, ?Cust)`.
std::string ToString(const Term &term);
std::string ToString(const Atom &atom);
std::string ToString(const Conjunction &conj);

// Collects the distinct variable names of an atom in order of occurrence,
// appending to `out`.
void CollectVariables(const Atom &atom, std::vector<std::string> *out);

}  // namespace ruledoc

#endif  // RULEDOC_AST_H_
