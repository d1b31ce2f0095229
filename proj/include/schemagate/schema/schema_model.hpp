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

#ifndef SCHEMAGATE_SCHEMA_SCHEMA_MODEL_HPP_
#define SCHEMAGATE_SCHEMA_SCHEMA_MODEL_HPP_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schemagate/rdf/term.hpp"

namespace schemagate::schema {

// Restricts which schema-bearing predicates take part in extraction.
struct PredicateFilter {
  enum class Mode { kInclude, kExclude };

  Mode mode = Mode::kExclude;
  std::set<std::string> predicates;

  // Throws std::invalid_argument when `predicates` is empty.
  void Validate() const;
  bool Allows(const std::string& predicate) const;
};

// The predicates extraction understands when no filter narrows them:
// rdf:type, rdfs:subClassOf, rdfs:domain, rdfs:range, rdfs:label and
// schema.org domainIncludes (http and https).
const std::set<std::string>& SchemaBearingPredicates();

struct SchemaModel {
  std::set<std::string> etypes;
  std::set<std::string> properties;
  std::map<std::string, std::set<std::string>> domain_of;
  std::set<std::pair<std::string, std::string>> subclass;  // (child, parent)
  std::map<std::string, std::string> labels;

  // Set when extraction found no entity types; the model is still valid.
  bool empty_schema = false;
  std::vector<std::string> warnings;

  // Properties whose domain includes `etype`.
  std::set<std::string> PropertiesOf(const std::string& etype) const;
};

class SubclassCycleError : public std::runtime_error {
 public:
  explicit SubclassCycleError(std::vector<std::string> cycle);
  // The cycle as a path whose first and last entries coincide.
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

SchemaModel ExtractSchema(const rdf::Graph& graph,
                          const std::optional<PredicateFilter>& filter = {});

// Extends every property's domain with all descendants of its domain
// classes. Self-loops (C subClassOf C) are ignored; any longer cycle raises
// SubclassCycleError.
SchemaModel InheritProperties(const SchemaModel& model);

}  // namespace schemagate::schema

#endif  // SCHEMAGATE_SCHEMA_SCHEMA_MODEL_HPP_
