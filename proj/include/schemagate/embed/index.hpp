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

#ifndef SCHEMAGATE_EMBED_INDEX_HPP_
#define SCHEMAGATE_EMBED_INDEX_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "schemagate/rdf/term.hpp"

namespace schemagate::embed {

using EntityId = std::int32_t;
using RelationId = std::int32_t;

struct Fact {
  EntityId head = 0;
  RelationId relation = 0;
  EntityId tail = 0;
  friend auto operator<=>(const Fact&, const Fact&) = default;
};

// Dense integer view of a graph: sorted entity and relation labels mapped
// to gap-free ids, and the duplicate-free fact list.
struct TripleIndex {
  std::vector<std::string> entities;
  std::vector<std::string> relations;
  std::map<std::string, EntityId> entity_to_id;
  std::map<std::string, RelationId> relation_to_id;
  std::vector<Fact> facts;
  std::set<Fact> fact_set;
  std::size_t dropped_literals = 0;

  std::size_t num_entities() const { return entities.size(); }
  std::size_t num_relations() const { return relations.size(); }
  bool Contains(const Fact& f) const { return fact_set.contains(f); }
};

class EmptyIndexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Label used for a term inside the index: the IRI, "_:label" for blank
// nodes, and an N-Triples style rendering for literals.
std::string EntityLabel(const rdf::Term& term);

// Throws EmptyIndexError when no fact survives literal filtering.
TripleIndex BuildIndex(const rdf::Graph& graph, bool drop_literals);

// Builds an index straight from labeled facts (used by tests and synthetic
// graphs). Labels are sorted and id-assigned like BuildIndex.
TripleIndex IndexFromLabels(
    const std::vector<std::array<std::string, 3>>& labeled_facts);

}  // namespace schemagate::embed

#endif  // SCHEMAGATE_EMBED_INDEX_HPP_
