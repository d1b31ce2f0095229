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

#include "schemagate/embed/index.hpp"

#include <array>

#include "schemagate/rdf/serializer.hpp"

namespace schemagate::embed {

std::string EntityLabel(const rdf::Term& term) {
  if (!term.is_literal()) return term.ToDisplay();
  std::string out = "\"" + rdf::EscapeString(term.value()) + "\"";
  if (!term.language().empty()) return out + "@" + term.language();
  if (!term.datatype().empty()) return out + "^^<" + term.datatype() + ">";
  return out;
}

TripleIndex IndexFromLabels(
    const std::vector<std::array<std::string, 3>>& labeled_facts) {
  TripleIndex index;
  std::set<std::string> entities;
  std::set<std::string> relations;
  for (const auto& [h, r, t] : labeled_facts) {
    entities.insert(h);
    entities.insert(t);
    relations.insert(r);
  }
  index.entities.assign(entities.begin(), entities.end());
  index.relations.assign(relations.begin(), relations.end());
  for (std::size_t i = 0; i < index.entities.size(); ++i) {
    index.entity_to_id[index.entities[i]] = static_cast<EntityId>(i);
  }
  for (std::size_t i = 0; i < index.relations.size(); ++i) {
    index.relation_to_id[index.relations[i]] = static_cast<RelationId>(i);
  }
  for (const auto& [h, r, t] : labeled_facts) {
    Fact f{index.entity_to_id.at(h), index.relation_to_id.at(r),
           index.entity_to_id.at(t)};
    if (index.fact_set.insert(f).second) index.facts.push_back(f);
  }
  return index;
}

TripleIndex BuildIndex(const rdf::Graph& graph, bool drop_literals) {
  std::vector<std::array<std::string, 3>> labeled;
  std::size_t dropped = 0;
  for (const rdf::Triple& t : graph.triples()) {
    if (t.object.is_literal() && drop_literals) {
      ++dropped;
      continue;
    }
    labeled.push_back({EntityLabel(t.subject), t.predicate.value(),
                       EntityLabel(t.object)});
  }
  if (labeled.empty()) {
    throw EmptyIndexError(
        dropped > 0 ? "no facts left after dropping " + std::to_string(dropped) +
                          " literal-object triples"
                    : "graph has no triples to embed");
  }
  TripleIndex index = IndexFromLabels(labeled);
  index.dropped_literals = dropped;
  return index;
}

}  // namespace schemagate::embed
