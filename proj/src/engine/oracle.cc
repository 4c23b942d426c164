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

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "ruledoc/closure_kernels.h"
#include "ruledoc/engine.h"

namespace ruledoc {
namespace {

using kernels::GroundClause;

constexpr size_t kMaskBits = 64;
constexpr uint64_t kMaxAssignments = uint64_t{1} << 22;
constexpr size_t kBatch = 1024;

[[noreturn]] void TooLarge(const std::string &what) {
  throw EngineError("E_UNIVERSE_TOO_LARGE", what);
}

// Calls `fn` with every assignment of `vars` over `constants`.
template <typename Fn>
void ForEachAssignment(const std::vector<std::string> &vars,
                       const std::vector<std::string> &constants, Fn fn) {
  uint64_t total = 1;
  for (size_t i = 0; i < vars.size(); ++i) {
    total *= constants.size();
    if (total > kMaxAssignments) {
      TooLarge("too many ground instances for " + std::to_string(vars.size()) +
               " variables");
    }
  }
  std::map<std::string, std::string> binding;
  std::vector<size_t> digits(vars.size(), 0);
  for (uint64_t n = 0; n < total; ++n) {
    for (size_t i = 0; i < vars.size(); ++i) binding[vars[i]] = constants[digits[i]];
    fn(binding);
    for (size_t i = 0; i < vars.size(); ++i) {
      if (++digits[i] < constants.size()) break;
      digits[i] = 0;
    }
  }
}

Atom Ground(const Atom &pattern, const std::map<std::string, std::string> &b) {
  Atom out{pattern.predicate, {}};
  for (const Term &t : pattern.args) {
    out.args.push_back(t.is_constant() ? t : Term::Constant(b.at(t.name)));
  }
  return out;
}

template <typename Fn>
void ForEachDisjunct(const RuleSet &rs, Fn fn) {
  for (const Rule &r : rs.rules) {
    for (const Conjunction &c : r.premises) fn(r, c);
  }
}

class Grounder {
 public:
  Grounder(const RuleSet &a, const RuleSet &b,
           const std::vector<std::string> &universe) {
    std::set<std::string> constants(universe.begin(), universe.end());
    std::map<std::string, size_t> arity;
    auto visit = [&](const Atom &atom) {
      arity.emplace(atom.predicate, atom.arity());
      for (const Term &t : atom.args) {
        if (t.is_constant()) constants.insert(t.name);
      }
    };
    for (const RuleSet *rs : {&a, &b}) {
      ForEachDisjunct(*rs, [&](const Rule &, const Conjunction &c) {
        for (const Atom &atom : c.atoms) visit(atom);
      });
      for (const Rule &r : rs->rules) visit(r.conclusion);
    }
    constants_.assign(constants.begin(), constants.end());

    herbrand_base_size_ = 0;
    for (const auto &[pred, n] : arity) {
      size_t count = 1;
      for (size_t i = 0; i < n; ++i) {
        count = count > std::numeric_limits<size_t>::max() / constants_.size()
                    ? std::numeric_limits<size_t>::max()
                    : count * constants_.size();
      }
      herbrand_base_size_ =
          std::min(herbrand_base_size_ + count,
                   std::numeric_limits<size_t>::max() - 1);
    }

    std::set<Atom> relevant;
    for (const RuleSet *rs : {&a, &b}) {
      ForEachDisjunct(*rs, [&](const Rule &, const Conjunction &c) {
        for (const Atom &pattern : c.atoms) {
          std::vector<std::string> vars;
          CollectVariables(pattern, &vars);
          ForEachAssignment(vars, constants_, [&](const auto &binding) {
            relevant.insert(Ground(pattern, binding));
            if (relevant.size() > kMaxEnumeratedAtoms) {
              TooLarge("more than " + std::to_string(kMaxEnumeratedAtoms) +
                       " relevant ground atoms");
            }
          });
        }
      });
    }
    for (const Atom &atom : relevant) Intern(atom);
    relevant_count_ = atoms_.size();
  }

  std::vector<GroundClause> Clauses(const RuleSet &rs) {
    std::set<std::pair<uint64_t, uint64_t>> unique;
    ForEachDisjunct(rs, [&](const Rule &r, const Conjunction &c) {
      std::vector<std::string> vars;
      for (const Atom &atom : c.atoms) CollectVariables(atom, &vars);
      std::vector<std::string> head_vars;
      CollectVariables(r.conclusion, &head_vars);
      for (const std::string &v : head_vars) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
          throw EngineError("E_NOT_RANGE_RESTRICTED",
                            "rule <" + r.label + ">: conclusion variable ?" +
                                v + " is unbound");
        }
      }
      ForEachAssignment(vars, constants_, [&](const auto &binding) {
        uint64_t body = 0;
        for (const Atom &atom : c.atoms) body |= Bit(Ground(atom, binding));
        const uint64_t head = Bit(Ground(r.conclusion, binding));
        if ((body & head) == 0) unique.emplace(body, head);
      });
    });
    std::vector<GroundClause> out;
    for (const auto &[body, head] : unique) out.push_back({body, head});
    return out;
  }

  FactBase Decode(uint64_t mask) const {
    FactBase fb;
    for (size_t i = 0; i < atoms_.size(); ++i) {
      if (mask & (uint64_t{1} << i)) fb.Insert(atoms_[i]);
    }
    return fb;
  }

  size_t herbrand_base_size() const { return herbrand_base_size_; }
  size_t relevant_count() const { return relevant_count_; }

 private:
  uint64_t Bit(const Atom &atom) { return uint64_t{1} << Intern(atom); }

  size_t Intern(const Atom &atom) {
    auto [it, fresh] = index_.emplace(atom, atoms_.size());
    if (fresh) {
      if (atoms_.size() == kMaskBits) {
        TooLarge("more than 64 ground atoms reachable by the rules");
      }
      atoms_.push_back(atom);
    }
    return it->second;
  }

  std::vector<std::string> constants_;
  std::map<Atom, size_t> index_;
  std::vector<Atom> atoms_;
  size_t herbrand_base_size_ = 0;
  size_t relevant_count_ = 0;
};

}  // namespace

Equivalence CheckConclusionsEqual(const RuleSet &a, const RuleSet &b,
                                  const std::vector<std::string> &universe) {
  if (universe.empty()) {
    throw EngineError("E_EMPTY_UNIVERSE", "universe must not be empty");
  }
  Grounder grounder(a, b, universe);
  const std::vector<GroundClause> clauses_a = grounder.Clauses(a);
  const std::vector<GroundClause> clauses_b = grounder.Clauses(b);

  Equivalence result;
  result.herbrand_base_size = grounder.herbrand_base_size();
  result.relevant_atoms = grounder.relevant_count();

  const uint64_t total = uint64_t{1} << result.relevant_atoms;
  std::vector<uint64_t> left(kBatch), right(kBatch);
  for (uint64_t start = 0; start < total; start += kBatch) {
    const size_t n = static_cast<size_t>(std::min<uint64_t>(kBatch, total - start));
    for (size_t i = 0; i < n; ++i) left[i] = right[i] = start + i;
    kernels::Close(clauses_a, std::span(left.data(), n));
    kernels::Close(clauses_b, std::span(right.data(), n));
    for (size_t i = 0; i < n; ++i) {
      if (left[i] != right[i]) {
        result.equal = false;
        result.witness = grounder.Decode(start + i);
        result.fact_bases_checked = start + i + 1;
        return result;
      }
    }
  }
  result.fact_bases_checked = total;
  return result;
}

bool ConclusionsEqual(const RuleSet &a, const RuleSet &b,
                      const std::vector<std::string> &universe) {
  return CheckConclusionsEqual(a, b, universe).equal;
}

}  // namespace ruledoc
