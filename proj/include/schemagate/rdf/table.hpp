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

#ifndef SCHEMAGATE_RDF_TABLE_HPP_
#define SCHEMAGATE_RDF_TABLE_HPP_

#include <array>
#include <string>
#include <vector>

#include "schemagate/rdf/term.hpp"

namespace schemagate::rdf {

// One row per triple: subject, predicate, object, object_kind, language,
// datatype. Blank nodes are rendered "_:label".
struct TripleTable {
  static const std::array<std::string, 6>& Header();

  std::vector<std::array<std::string, 6>> rows;

  std::string ToCsv() const;
};

TripleTable TriplesToTable(const Graph& graph);

}  // namespace schemagate::rdf

#endif  // SCHEMAGATE_RDF_TABLE_HPP_
