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

#ifndef SCHEMAGATE_RDF_SERIALIZER_HPP_
#define SCHEMAGATE_RDF_SERIALIZER_HPP_

#include <string>

#include "schemagate/rdf/parser.hpp"
#include "schemagate/rdf/term.hpp"

namespace schemagate::rdf {

// Writes `graph` as Turtle or N-Triples. Blank nodes are written as b0, b1,
// ... in order of first appearance, so the output reparses to an isomorphic
// graph. Turtle output declares the graph's own prefixes, groups triples by
// subject and abbreviates rdf:type as 'a'.
std::string SerializeGraph(const Graph& graph, RdfFormat format);

// N-Triples/Turtle escaping for the contents of a "..." literal.
std::string EscapeString(std::string_view s);

}  // namespace schemagate::rdf

#endif  // SCHEMAGATE_RDF_SERIALIZER_HPP_
