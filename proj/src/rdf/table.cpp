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

#include "schemagate/rdf/table.hpp"

#include "schemagate/util/csv.hpp"

namespace schemagate::rdf {

const std::array<std::string, 6>& TripleTable::Header() {
  static const std::array<std::string, 6> kHeader = {
      "subject", "predicate", "object", "object_kind", "language", "datatype"};
  return kHeader;
}

std::string TripleTable::ToCsv() const {
  std::string out = csv::Row({Header().begin(), Header().end()});
  for (const auto& row : rows) out += csv::Row({row.begin(), row.end()});
  return out;
}

TripleTable TriplesToTable(const Graph& graph) {
  TripleTable table;
  table.rows.reserve(graph.size());
  for (const Triple& t : graph.triples()) {
    table.rows.push_back({t.subject.ToDisplay(), t.predicate.value(),
                          t.object.ToDisplay(),
                          std::string(KindName(t.object.kind())),
                          t.object.language(), t.object.datatype()});
  }
  return table;
}

}  // namespace schemagate::rdf
