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

#include <map>
#include <tuple>
#include <utility>

#include "ruledoc/engine.h"

namespace ruledoc {

FactBase::FactBase(std::initializer_list<Atom> atoms) {
  for (const Atom &a : atoms) Insert(a);
}

bool FactBase::Insert(Atom atom) {
  if (!atom.IsGround()) {
    throw EngineError("E_NOT_GROUND",
                      "fact '" + ToString(atom) + "' is not ground");
  }
  return facts_.insert(std::move(atom)).second;
}

bool FactBase::Includes(const FactBase &other) const {
  for (const Atom &a : other) {
    if (!Contains(a)) return false;
  }
  return true;
}

namespace {

using Bindings = std::vector<std::pair<std::string, std::string>>;
using Index = std::map<std::string, std::vector<const Atom *>>;

const std::string *Lookup(const Bindings &b, const std::string &var) {
  for (const auto &[name, value] : b) {
    if (name == var) return &value;
  }
  return nullptr;
}

// Extends `b` so that `pattern` matches `fact`; returns how many bindings were
// added, or -1 on mismatch (with `b` restored).
int Match(const Atom &pattern, const Atom &fact, Bindings *b) {
  if (pattern.args.size() != fact.args.size()) return -1;
  int added = 0;
  for (size_t i = 0; i < pattern.args.size(); ++i) {
    const Term &p = pattern.args[i];
    const std::string &value = fact.args[i].name;
    bool ok;
    if (p.is_constant()) {
      ok = p.name == value;
    } else if (const std::string *bound = Lookup(*b, p.name)) {
      ok = *bound == value;
    } else {
      b->emplace_back(p.name, value);
      ++added;
      ok = true;
    }
    if (!ok) {
      b->resize(b->size() - added);
      return -1;
    }
  }
  return added;
}

Atom Apply(const Atom &pattern, const Bindings &b, const Rule &rule) {
  Atom out{pattern.predicate, {}};
  for (const Term &t : pattern.args) {
    if (t.is_constant()) {
      out.args.push_back(t);
      continue;
    }
    const std::string *value = Lookup(b, t.name);
    if (value == nullptr) {
      throw EngineError("E_NOT_RANGE_RESTRICTED",
                        "rule <" + rule.label + "> would derive non-ground '" +
                            ToString(pattern) + "'");
    }
    out.args.push_back(Term::Constant(*value));
  }
  return out;
}

class SemiNaive {
 public:
  SemiNaive(const RuleSet &rs, const FactBase &fb) : rs_(rs), facts_(fb) {}

  Saturation Run() {
    FactBase delta = facts_;
    FactBase old;
    while (!delta.empty()) {
      Index all = MakeIndex(facts_);
      Index fresh = MakeIndex(delta);
      Index prior = MakeIndex(old);
      FactBase next;
      for (const Rule &rule : rs_.rules) {
        for (size_t d = 0; d < rule.premises.size(); ++d) {
          const std::vector<Atom> &body = rule.premises[d].atoms;
          // The atom at `pivot` reads the previous round's new facts, earlier
          // atoms read older facts and later atoms read everything. Each
          // firing is then enumerated in exactly one round.
          for (size_t pivot = 0; pivot < body.size(); ++pivot) {
            Bindings b;
            Join(rule, d, pivot, 0, all, fresh, prior, &b, &next);
          }
        }
      }
      old = facts_;
      delta = FactBase();
      for (const Atom &a : next) {
        if (facts_.Insert(a)) delta.Insert(a);
      }
    }
    Saturation out;
    out.facts = std::move(facts_);
    for (auto &[key, d] : derivations_) out.derivations.push_back(std::move(d));
    return out;
  }

 private:
  static Index MakeIndex(const FactBase &fb) {
    Index index;
    for (const Atom &a : fb) index[a.predicate].push_back(&a);
    return index;
  }

  void Join(const Rule &rule, size_t d, size_t pivot, size_t i,
            const Index &all, const Index &fresh, const Index &prior,
            Bindings *b, FactBase *next) {
    const std::vector<Atom> &body = rule.premises[d].atoms;
    if (i == body.size()) {
      Atom head = Apply(rule.conclusion, *b, rule);
      auto key = std::make_tuple(head, rule.label, d);
      if (derivations_.count(key) == 0) {
        Derivation der{head, rule.label, {}, d};
        for (const auto &[var, value] : *b) der.substitution[var] = value;
        derivations_.emplace(std::move(key), std::move(der));
      }
      next->Insert(std::move(head));
      return;
    }
    const Index &source = i < pivot ? prior : i == pivot ? fresh : all;
    auto it = source.find(body[i].predicate);
    if (it == source.end()) return;
    for (const Atom *fact : it->second) {
      int added = Match(body[i], *fact, b);
      if (added < 0) continue;
      Join(rule, d, pivot, i + 1, all, fresh, prior, b, next);
      b->resize(b->size() - added);
    }
  }

  const RuleSet &rs_;
  FactBase facts_;
  std::map<std::tuple<Atom, std::string, size_t>, Derivation> derivations_;
};

}  // namespace

Saturation Saturate(const RuleSet &rs, const FactBase &fb) {
  return SemiNaive(rs, fb).Run();
}

}  // namespace ruledoc
