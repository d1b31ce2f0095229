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

#ifndef SCHEMAGATE_RDF_BGP_HPP_
#define SCHEMAGATE_RDF_BGP_HPP_

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "schemagate/rdf/term.hpp"

namespace schemagate::rdf {

struct Variable {
  std::string name;  // without the leading '?'
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

// Variable name -> bound term. Iteration order is by variable name, so the
// lexicographic comparison of two binding sets is by variable name, then
// term value.
using BindingSet = std::map<std::string, Term>;

// Every binding set under which all patterns, once substituted, are triples
// of `graph`. Results are duplicate-free and sorted. Throws
// std::invalid_argument on an empty pattern list.
std::vector<BindingSet> MatchBgp(const Graph& graph,
                                 std::span<const TriplePattern> patterns);

}  // namespace schemagate::rdf

#endif  // SCHEMAGATE_RDF_BGP_HPP_
