// Copyright 2026 The Schemagate Authors.
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

#include "schemagate/rdf/bgp.hpp"

#include <set>
#include <stdexcept>

namespace schemagate::rdf {

namespace {

// Unifies one pattern position with a term, extending `binding`. Returns
// false on conflict; `added` records newly bound names for rollback.
bool Unify(const PatternTerm& pattern, const Term& term, BindingSet& binding,
           std::vector<std::string>& added) {
  if (const Term* fixed = std::get_if<Term>(&pattern)) return *fixed == term;
  const std::string& name = std::get<Variable>(pattern).name;
  auto it = binding.find(name);
  if (it != binding.end()) return it->second == term;
  binding.emplace(name, term);
  added.push_back(name);
  return true;
}

class Matcher {
 public:
  Matcher(const Graph& graph, std::span<const TriplePattern> patterns)
      : graph_(graph), patterns_(patterns) {
    for (const Triple& t : graph_.triples()) {
      by_predicate_[t.predicate.value()].push_back(&t);
    }
  }

  std::vector<BindingSet> Run() {
    BindingSet binding;
    Search(0, binding);
    return {solutions_.begin(), solutions_.end()};
  }

 private:
  void Search(std::size_t depth, BindingSet& binding) {
    if (depth == patterns_.size()) {
      solutions_.insert(binding);
      return;
    }
    const TriplePattern& p = patterns_[depth];
    for (const Triple* candidate : Candidates(p, binding)) {
      const Triple& t = *candidate;
      std::vector<std::string> added;
      if (Unify(p.subject, t.subject, binding, added) &&
          Unify(p.predicate, t.predicate, binding, added) &&
          Unify(p.object, t.object, binding, added)) {
        Search(depth + 1, binding);
      }
      for (const std::string& name : added) binding.erase(name);
    }
  }

  // Triples that can match `p`'s predicate position under `binding`.
  const std::vector<const Triple*>& Candidates(const TriplePattern& p,
                                               const BindingSet& binding) {
    const Term* predicate = std::get_if<Term>(&p.predicate);
    if (predicate == nullptr) {
      auto it = binding.find(std::get<Variable>(p.predicate).name);
      if (it != binding.end()) predicate = &it->second;
    }
    if (predicate == nullptr) {
      if (all_.empty()) {
        for (const Triple& t : graph_.triples()) all_.push_back(&t);
      }
      return all_;
    }
    auto it = by_predicate_.find(predicate->value());
    if (it == by_predicate_.end() || !predicate->is_iri()) return none_;
    return it->second;
  }

  const Graph& graph_;
  std::span<const TriplePattern> patterns_;
  std::map<std::string, std::vector<const Triple*>> by_predicate_;
  std::vector<const Triple*> all_;
  const std::vector<const Triple*> none_;
  std::set<BindingSet> solutions_;
};

}  // namespace

std::vector<BindingSet> MatchBgp(const Graph& graph,
                                 std::span<const TriplePattern> patterns) {
  if (patterns.empty()) throw std::invalid_argument("empty pattern list");
  return Matcher(graph, patterns).Run();
}

}  // namespace schemagate::rdf
