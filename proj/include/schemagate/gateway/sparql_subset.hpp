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

#ifndef SCHEMAGATE_GATEWAY_SPARQL_SUBSET_HPP_
#define SCHEMAGATE_GATEWAY_SPARQL_SUBSET_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "schemagate/rdf/bgp.hpp"
#include "schemagate/rdf/term.hpp"

namespace schemagate::gateway {

// Malformed query text.
class QuerySyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed SPARQL that uses something beyond SELECT over one basic graph
// pattern. feature() names it, e.g. "OPTIONAL" or "property paths".
class UnsupportedFeature : public std::invalid_argument {
 public:
  explicit UnsupportedFeature(std::string feature);
  const std::string& feature() const { return feature_; }

 private:
  std::string feature_;
};

// PREFIX/BASE prologue, SELECT [DISTINCT] (?vars | *) [WHERE] { triples }
// with ';' and ',' lists, 'a', IRIs, prefixed names and literals.
struct SelectQuery {
  std::vector<std::string> variables;  // projection, in order
  bool distinct = false;
  std::vector<rdf::TriplePattern> patterns;
};

SelectQuery ParseSelect(std::string_view text);

struct QueryResult {
  std::vector<std::string> variables;
  std::vector<std::vector<rdf::Term>> rows;

  // SPARQL 1.1 JSON results layout.
  nlohmann::json ToJson() const;
  // SPARQL 1.1 CSV results layout.
  std::string ToCsv() const;
};

QueryResult RunQuery(const rdf::Graph& graph, std::string_view text);

}  // namespace schemagate::gateway

#endif  // SCHEMAGATE_GATEWAY_SPARQL_SUBSET_HPP_
